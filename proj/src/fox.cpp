#include "knotlog/fox.hpp"

#include <algorithm>

#include "knotlog/error.hpp"

namespace knotlog {

RingElem fox_derivative(const Word& w, const Symbol& x) {
  RingElem result;
  Word prefix;
  for (const auto& letter : w.letters()) {
    if (letter.symbol == x) {
      // d(x^e)/dx = 1 + x + ... + x^(e-1) for e > 0,
      //           = -(x^-1 + ... + x^e)    for e < 0.
      if (letter.exponent > 0) {
        for (long k = 0; k < letter.exponent; ++k) {
          result.add_term(multiply(prefix, Word::generator(x, k)), 1);
        }
      } else {
        for (long k = -1; k >= letter.exponent; --k) {
          result.add_term(multiply(prefix, Word::generator(x, k)), -1);
        }
      }
    }
    prefix = multiply(prefix, Word::generator(letter.symbol, letter.exponent));
  }
  return result;
}

JacobianMatrix fox_jacobian(const Presentation& p) {
  JacobianMatrix f{RingMatrix(p.relators.size(), p.generators.size()), p.generators};
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (std::size_t j = 0; j < p.generators.size(); ++j) {
      f.entries.at(i, j) = fox_derivative(p.relators[i], p.generators[j]);
    }
  }
  return f;
}

RingMatrix delete_column(const JacobianMatrix& f, const Symbol& x) {
  auto it = std::find(f.column_labels.begin(), f.column_labels.end(), x);
  if (it == f.column_labels.end()) {
    throw DomainError("cannot delete column '" + x + "': not a generator of the presentation");
  }
  auto deleted = static_cast<std::size_t>(it - f.column_labels.begin());
  const RingMatrix& m = f.entries;
  RingMatrix a(m.rows(), m.cols() - 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0, k = 0; j < m.cols(); ++j) {
      if (j != deleted) a.at(i, k++) = m.at(i, j);
    }
  }
  return a;
}

const Symbol& default_deleted_column(const JacobianMatrix& f) {
  if (f.column_labels.empty()) throw DomainError("Jacobian has no columns to delete");
  return f.column_labels.back();
}

}  // namespace knotlog
