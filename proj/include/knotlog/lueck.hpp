#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "knotlog/group_ring.hpp"
#include "knotlog/series.hpp"

namespace knotlog {

// Sufficient k for convergence: (g-1)^2 times the largest entry 1-norm,
// where g-1 is the dimension of A. Throws DomainError for a zero matrix.
Rational k_bound(const RingMatrix& a);

// Partial sums of
//   (g-1) ln k2 - sum_{n>=1} (1/n) tr((I - A A* / k2)^n)
// with every trace exact. k2 below k_bound(A)^2 is allowed and reported as
// a caveat. Throws DomainError for non-square A, k2 <= 0 or terms < 1, and
// ResourceError when a power outgrows limits.
SeriesReport lueck_series_symbolic(const RingMatrix& a, const Rational& k2, long terms,
                                   const RingLimits& limits = {});

struct ComplexLueckResult {
  SeriesReport report;           // report.reference holds 2 ln|det A|
  std::vector<double> eigenvalues;  // of A A*, ascending
};

// Same series for a complex matrix, evaluated through the eigenvalues of
// A A*. Throws DomainError for a singular or non-square A.
ComplexLueckResult lueck_closed_form_complex(const Eigen::MatrixXcd& a, double k2, long terms);

// Bound on |estimate(N) - 2 ln|det A|| from the geometric tail of each
// eigenvalue's log series: dim * r^(N+1) / ((N+1)(1-r)), r = max |1 - l/k2|.
double geometric_tail_bound(std::span<const double> eigenvalues, double k2, long terms);

// Smallest N whose tail bound is at most tolerance.
long terms_for_tolerance(std::span<const double> eigenvalues, double k2, double tolerance);

// Value of the series for a finite cover of index `index`, pulled back to the
// base: the covering value divided by the index.
double scale_by_index(double value, long index);

}  // namespace knotlog
