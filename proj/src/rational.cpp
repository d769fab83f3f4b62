#include "knotlog/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "knotlog/error.hpp"

namespace knotlog {

namespace {

[[noreturn]] void bad_rational(std::string_view text, std::size_t column) {
  throw ParseError("invalid rational '" + std::string(text) + "'", 1, column + 1);
}

BigInt parse_digits(std::string_view text, std::string_view digits, std::size_t offset) {
  if (digits.empty()) bad_rational(text, offset);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) bad_rational(text, offset + i);
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) bad_rational(text, begin);

  bool negative = false;
  std::size_t i = 0;
  if (body[0] == '+' || body[0] == '-') {
    negative = body[0] == '-';
    i = 1;
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(text, body.substr(i, slash - i), begin + i);
    BigInt den = parse_digits(text, body.substr(slash + 1), begin + slash + 1);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 1, begin + slash + 2);
    value = Rational(num, den);
  } else {
    std::size_t exp_pos = body.find_first_of("eE");
    std::string_view mantissa = body.substr(i, exp_pos == std::string_view::npos ? std::string_view::npos : exp_pos - i);
    std::size_t dot = mantissa.find('.');
    std::string digits(mantissa.substr(0, dot));
    std::size_t frac_len = 0;
    if (dot != std::string_view::npos) {
      std::string_view frac = mantissa.substr(dot + 1);
      frac_len = frac.size();
      digits += frac;
    }
    value = Rational(parse_digits(text, digits, begin + i));
    long exponent = -static_cast<long>(frac_len);
    if (exp_pos != std::string_view::npos) {
      std::string_view e = body.substr(exp_pos + 1);
      bool e_negative = false;
      std::size_t j = 0;
      if (!e.empty() && (e[0] == '+' || e[0] == '-')) {
        e_negative = e[0] == '-';
        j = 1;
      }
      BigInt ev = parse_digits(text, e.substr(j), begin + exp_pos + 1 + j);
      if (!ev.fits_slong_p() || std::abs(ev.get_si()) > 100000) bad_rational(text, begin + exp_pos);
      exponent += e_negative ? -ev.get_si() : ev.get_si();
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    if (exponent >= 0) {
      value *= scale;
    } else {
      value /= scale;
    }
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_display(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

}  // namespace knotlog
