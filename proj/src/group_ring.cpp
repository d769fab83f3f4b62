#include "knotlog/group_ring.hpp"

#include <utility>

#include "knotlog/error.hpp"

namespace knotlog {

RingElem::RingElem(const Word& w, const Rational& c) { add_term(w, c); }

Rational RingElem::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void RingElem::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [word, coeff] : terms_) {
    bool negative = coeff < 0;
    Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (word.is_identity()) {
      out += rational_display(magnitude);
    } else if (magnitude == 1) {
      out += word.to_string();
    } else {
      out += rational_display(magnitude) + "*" + word.to_string();
    }
  }
  return out;
}

RingElem add(const RingElem& p, const RingElem& q) {
  RingElem r = p;
  for (const auto& [w, c] : q.terms()) r.add_term(w, c);
  return r;
}

RingElem sub(const RingElem& p, const RingElem& q) {
  RingElem r = p;
  for (const auto& [w, c] : q.terms()) r.add_term(w, -c);
  return r;
}

RingElem mul(const RingElem& p, const RingElem& q, const RingLimits& limits) {
  RingElem r;
  for (const auto& [u, a] : p.terms()) {
    for (const auto& [v, b] : q.terms()) {
      r.add_term(multiply(u, v), a * b);
      if (r.support_size() > limits.max_support) {
        throw ResourceError("group ring product exceeds the support cap of " +
                            std::to_string(limits.max_support) + " words");
      }
    }
  }
  return r;
}

RingElem scale(const Rational& c, const RingElem& p) {
  RingElem r;
  if (c == 0) return r;
  for (const auto& [w, a] : p.terms()) r.add_term(w, c * a);
  return r;
}

RingElem negate(const RingElem& p) { return scale(-1, p); }

RingElem star(const RingElem& p) {
  RingElem r;
  for (const auto& [w, c] : p.terms()) r.add_term(invert(w), c);
  return r;
}

Rational one_norm(const RingElem& p) {
  Rational total = 0;
  for (const auto& [w, c] : p.terms()) total += abs(c);
  return total;
}

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one();
  return m;
}

bool RingMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::string RingMatrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string();
    }
    out += ']';
  }
  return rows_ == 1 ? out : "[" + out + "]";
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b, const RingLimits& limits) {
  if (a.cols() != b.rows()) {
    throw DomainError("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
  RingMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      RingElem sum;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        RingElem product = mul(a.at(i, k), b.at(k, j), limits);
        for (const auto& [w, coeff] : product.terms()) sum.add_term(w, coeff);
        if (sum.support_size() > limits.max_support) {
          throw ResourceError("matrix entry exceeds the support cap of " +
                              std::to_string(limits.max_support) + " words");
        }
      }
      c.at(i, j) = std::move(sum);
    }
  }
  return c;
}

RingMatrix mat_star(const RingMatrix& a) {
  RingMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = star(a.at(i, j));
  }
  return r;
}

RingMatrix mat_add_scaled(const RingMatrix& a, const Rational& c, const RingMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError("matrix sum dimension mismatch");
  }
  RingMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (const auto& [w, coeff] : b.at(i, j).terms()) r.at(i, j).add_term(w, c * coeff);
    }
  }
  return r;
}

Rational trace(const RingMatrix& m) {
  if (!m.is_square()) {
    throw DomainError("trace of a non-square " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " matrix");
  }
  Rational total = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) total += m.at(i, i).coefficient(Word{});
  return total;
}

}  // namespace knotlog
