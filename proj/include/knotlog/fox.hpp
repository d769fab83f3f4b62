#pragma once

#include <vector>

#include "knotlog/group_ring.hpp"
#include "knotlog/presentation.hpp"

namespace knotlog {

// Fox derivative d(w)/d(x) in the free group ring, from the axioms
//   dx/dx = 1,  dy/dx = 0 (y != x),  d(uv)/dx = du/dx + u dv/dx.
// Entries are never reduced modulo any relators.
RingElem fox_derivative(const Word& w, const Symbol& x);

struct JacobianMatrix {
  RingMatrix entries;                 // (#relators) x (#generators)
  std::vector<Symbol> column_labels;  // generator order of the presentation
};

JacobianMatrix fox_jacobian(const Presentation& p);

// Drops column x, keeping the remaining columns in order. Whether x is
// trivial in the presented group is the caller's responsibility.
RingMatrix delete_column(const JacobianMatrix& f, const Symbol& x);

// Last generator; reproduces A = (1 + a + ... + a^(p-1)) for <a,b | a^p = b^q>.
const Symbol& default_deleted_column(const JacobianMatrix& f);

}  // namespace knotlog
