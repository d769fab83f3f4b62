#include "knotlog/series.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "knotlog/error.hpp"

namespace knotlog {

void CompensatedSum::add(double x) {
  double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    compensation_ += (sum_ - t) + x;
  } else {
    compensation_ += (x - t) + sum_;
  }
  sum_ = t;
}

double term_value(const SeriesTerm& t) {
  if (const auto* exact = std::get_if<Rational>(&t.term)) return exact->get_d();
  return std::get<double>(t.term);
}

SeriesBuilder::SeriesBuilder(std::string k2, double constant_part, Accumulation accumulation) {
  report_.k2 = std::move(k2);
  report_.constant_part = constant_part;
  report_.accumulation = accumulation;
  report_.estimate = constant_part;
}

double SeriesBuilder::current_estimate() const {
  return report_.accumulation == Accumulation::subtract ? report_.constant_part - sum_.value()
                                                        : report_.constant_part + sum_.value();
}

void SeriesBuilder::record(long n, std::variant<Rational, double> term, double value) {
  sum_.add(value);
  report_.terms.push_back(SeriesTerm{n, std::move(term), current_estimate()});
}

void SeriesBuilder::push(long n, Rational exact) {
  double value = exact.get_d();
  record(n, std::move(exact), value);
}

void SeriesBuilder::push(long n, double value) { record(n, value, value); }

SeriesReport SeriesBuilder::finish() && {
  report_.estimate = current_estimate();
  return std::move(report_);
}

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

double log_rational(const Rational& r) {
  if (r <= 0) throw DomainError("logarithm of a non-positive rational");
  long num_exp = 0, den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
  return std::log(num) - std::log(den) + static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

nlohmann::ordered_json to_json(const SeriesReport& report, std::size_t emit_terms) {
  nlohmann::ordered_json j;
  j["k2"] = report.k2;
  j["constant_part"] = report.constant_part;
  auto terms = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.terms.size() && i < emit_terms; ++i) {
    const auto& t = report.terms[i];
    nlohmann::ordered_json entry;
    entry["n"] = t.n;
    if (const auto* exact = std::get_if<Rational>(&t.term)) {
      entry["term"] = rational_string(*exact);
    } else {
      entry["term"] = std::get<double>(t.term);
    }
    entry["partial_estimate"] = t.partial_estimate;
    terms.push_back(std::move(entry));
  }
  j["terms"] = std::move(terms);
  j["estimate"] = report.estimate;
  j["caveats"] = report.caveats;
  j["term_count"] = report.terms.size();
  if (report.reference) j["reference"] = *report.reference;
  return j;
}

}  // namespace knotlog
