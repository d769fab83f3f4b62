#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotlog/rational.hpp"
#include "knotlog/word.hpp"

namespace knotlog {

// Guards group-ring products against runaway support growth in free groups.
struct RingLimits {
  std::size_t max_support = 1'000'000;
};

// Element of the rational group ring of a free group: a finitely supported
// map Word -> Rational with no zero coefficients stored.
class RingElem {
 public:
  using Terms = std::map<Word, Rational>;

  RingElem() = default;
  RingElem(const Word& w, const Rational& c = 1);

  static RingElem one() { return RingElem(Word{}); }
  static RingElem constant(const Rational& c) { return RingElem(Word{}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Rational coefficient(const Word& w) const;

  // Adds c*w in place.
  void add_term(const Word& w, const Rational& c);

  std::string to_string() const;

  bool operator==(const RingElem&) const = default;

 private:
  Terms terms_;
};

RingElem add(const RingElem& p, const RingElem& q);
RingElem sub(const RingElem& p, const RingElem& q);
RingElem mul(const RingElem& p, const RingElem& q, const RingLimits& limits = {});
RingElem scale(const Rational& c, const RingElem& p);
RingElem negate(const RingElem& p);
// Involution sum c_w w -> sum c_w w^-1 (coefficients are real).
RingElem star(const RingElem& p);
// Sum of |c_w|.
Rational one_norm(const RingElem& p);

inline RingElem operator+(const RingElem& p, const RingElem& q) { return add(p, q); }
inline RingElem operator-(const RingElem& p, const RingElem& q) { return sub(p, q); }
inline RingElem operator-(const RingElem& p) { return negate(p); }
inline RingElem operator*(const RingElem& p, const RingElem& q) { return mul(p, q); }

// Dense row-major matrix over the group ring.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols);

  static RingMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  RingElem& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const RingElem& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::string to_string() const;

  bool operator==(const RingMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<RingElem> entries_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b, const RingLimits& limits = {});
// Conjugate transpose: (A*)_{ij} = star(A_{ji}).
RingMatrix mat_star(const RingMatrix& a);
// A + c*B.
RingMatrix mat_add_scaled(const RingMatrix& a, const Rational& c, const RingMatrix& b);
// Coefficient of the identity word in the diagonal sum.
Rational trace(const RingMatrix& m);

}  // namespace knotlog
