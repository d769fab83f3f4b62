#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotlog/rational.hpp"

namespace knotlog {

using Exponents = std::vector<long>;

// Laurent polynomial in nvars commuting variables with exact rational
// coefficients. Zero coefficients are never stored.
class MultiLaurent {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MultiLaurent(std::size_t nvars = 1);

  static MultiLaurent constant(std::size_t nvars, const Rational& c);
  static MultiLaurent monomial(const Exponents& exponents, const Rational& c = 1);
  static MultiLaurent variable(std::size_t nvars, std::size_t index, long exponent = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);

  // names.size() must equal nvars; empty names render as x1, x2, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

  bool operator==(const MultiLaurent&) const = default;

 private:
  std::size_t nvars_;
  Terms terms_;
};

MultiLaurent add(const MultiLaurent& p, const MultiLaurent& q);
MultiLaurent sub(const MultiLaurent& p, const MultiLaurent& q);
MultiLaurent mul(const MultiLaurent& p, const MultiLaurent& q);
MultiLaurent scale(const Rational& c, const MultiLaurent& p);
// Negative powers are defined only for single-term polynomials.
MultiLaurent pow(const MultiLaurent& p, long exponent);

inline MultiLaurent operator+(const MultiLaurent& p, const MultiLaurent& q) { return add(p, q); }
inline MultiLaurent operator-(const MultiLaurent& p, const MultiLaurent& q) { return sub(p, q); }
inline MultiLaurent operator*(const MultiLaurent& p, const MultiLaurent& q) { return mul(p, q); }

std::complex<double> evaluate(const MultiLaurent& p, std::span<const std::complex<double>> point);

struct LaurentMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MultiLaurent> entries;

  const MultiLaurent& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
  MultiLaurent& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
};

std::string to_string(const LaurentMatrix& m, const std::vector<std::string>& names = {});

struct ParsedLaurent {
  MultiLaurent poly;
  std::vector<std::string> variables;  // order of first appearance
};

// Integer coefficients, identifiers as variables, + - * ^ and parentheses:
// "(t-1)^2", "1+x+x^2", "x^-1 + 2 + x". Throws ParseError.
ParsedLaurent parse_laurent(std::string_view text);

}  // namespace knotlog
