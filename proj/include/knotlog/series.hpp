#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "knotlog/rational.hpp"

namespace knotlog {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

struct SeriesTerm {
  long n = 0;
  std::variant<Rational, double> term;  // exact when available
  double partial_estimate = 0.0;
};

double term_value(const SeriesTerm& t);

// How terms combine with the constant part: Lueck-type reports subtract the
// trace terms from (g-1) ln k^2, plain logarithm series add theirs to zero.
enum class Accumulation { subtract, add };

struct SeriesReport {
  std::string k2;  // "p/q" for exact inputs, shortest decimal otherwise
  double constant_part = 0.0;
  Accumulation accumulation = Accumulation::subtract;
  std::vector<SeriesTerm> terms;
  double estimate = 0.0;
  std::optional<double> reference;  // known limit, when the operation has one
  std::vector<std::string> caveats;
};

// Builds a report term by term, keeping estimate and partial sums in step.
class SeriesBuilder {
 public:
  SeriesBuilder(std::string k2, double constant_part, Accumulation accumulation);

  void reserve(std::size_t n) { report_.terms.reserve(n); }
  void push(long n, Rational exact);
  void push(long n, double value);
  void caveat(std::string text) { report_.caveats.push_back(std::move(text)); }
  void reference(double value) { report_.reference = value; }

  double current_estimate() const;
  SeriesReport finish() &&;

 private:
  void record(long n, std::variant<Rational, double> term, double value);

  SeriesReport report_;
  CompensatedSum sum_;
};

// Shortest round-trip decimal form of a double.
std::string format_double(double value);

// ln of a positive rational without overflowing for huge numerators or
// denominators.
double log_rational(const Rational& r);

// JSON object following the report schema:
//   { "k2", "constant_part", "terms": [{"n", "term", "partial_estimate"}],
//     "estimate", "caveats" } plus "term_count" and, when known, "reference".
// Only the first emit_terms terms are written; the estimate covers all.
nlohmann::ordered_json to_json(const SeriesReport& report, std::size_t emit_terms);

}  // namespace knotlog
