#include "knotlog/lueck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "knotlog/error.hpp"

namespace knotlog {

Rational k_bound(const RingMatrix& a) {
  if (!a.is_square()) throw DomainError("k_bound needs a square matrix");
  if (a.is_zero()) throw DomainError("k_bound of the zero matrix is undefined");
  Rational largest = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) largest = std::max(largest, one_norm(a.at(i, j)));
  }
  Rational dim(static_cast<long>(a.rows()));
  return dim * dim * largest;
}

SeriesReport lueck_series_symbolic(const RingMatrix& a, const Rational& k2, long terms,
                                   const RingLimits& limits) {
  if (!a.is_square()) {
    throw DomainError("Lueck series needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()));
  }
  if (k2 <= 0) throw DomainError("k2 must be positive");
  if (terms < 1) throw DomainError("term count must be at least 1");

  const std::size_t dim = a.rows();
  SeriesBuilder builder(rational_string(k2), static_cast<double>(dim) * log_rational(k2),
                        Accumulation::subtract);
  builder.reserve(static_cast<std::size_t>(terms));
  builder.caveat(
      "trace taken in the free group ring: words are not reduced modulo the relators");
  if (a.is_zero()) {
    builder.caveat("A is zero: every term is 1/n and the series diverges");
  } else {
    Rational k = k_bound(a);
    if (k2 < k * k) {
      builder.caveat("k2 = " + rational_display(k2) + " is below the sufficient bound " +
                     rational_display(k * k) + "; convergence is not guaranteed");
    }
  }

  RingMatrix aa = mat_mul(a, mat_star(a), limits);
  RingMatrix step = mat_add_scaled(RingMatrix::identity(dim), Rational(-1) / k2, aa);
  RingMatrix power = step;
  for (long n = 1; n <= terms; ++n) {
    if (n > 1) power = mat_mul(power, step, limits);
    builder.push(n, Rational(trace(power) / n));
  }
  return std::move(builder).finish();
}

ComplexLueckResult lueck_closed_form_complex(const Eigen::MatrixXcd& a, double k2, long terms) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("complex Lueck series needs a nonempty square matrix");
  if (!(k2 > 0) || !std::isfinite(k2)) throw DomainError("k2 must be positive and finite");
  if (terms < 1) throw DomainError("term count must be at least 1");

  const auto dim = static_cast<std::size_t>(a.rows());
  // Hadamard's bound |det A| <= prod of column norms sets the singularity scale.
  double scale = 1.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) scale *= a.col(j).norm();
  double abs_det = std::abs(a.determinant());
  if (!(abs_det > 1e-12 * scale)) throw DomainError("matrix is singular: ln|det A| is -infinity");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a * a.adjoint(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue computation of A A* failed");
  std::vector<double> eigenvalues(solver.eigenvalues().data(),
                                  solver.eigenvalues().data() + solver.eigenvalues().size());

  SeriesBuilder builder(format_double(k2), static_cast<double>(dim) * std::log(k2),
                        Accumulation::subtract);
  builder.reserve(static_cast<std::size_t>(terms));
  builder.reference(2.0 * std::log(abs_det));
  double largest = eigenvalues.back();
  if (k2 < largest * (1.0 - 1e-9)) {
    builder.caveat("k2 = " + format_double(k2) + " is below the largest eigenvalue " +
                   format_double(largest) + " of A A*; the series may diverge");
  }

  std::vector<double> ratio(dim), power(dim, 1.0);
  for (std::size_t j = 0; j < dim; ++j) ratio[j] = 1.0 - eigenvalues[j] / k2;
  for (long n = 1; n <= terms; ++n) {
    double trace_sum = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      power[j] *= ratio[j];
      trace_sum += power[j];
    }
    builder.push(n, trace_sum / static_cast<double>(n));
  }
  return {std::move(builder).finish(), std::move(eigenvalues)};
}

double geometric_tail_bound(std::span<const double> eigenvalues, double k2, long terms) {
  double r = 0.0;
  for (double l : eigenvalues) r = std::max(r, std::abs(1.0 - l / k2));
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  auto next = static_cast<double>(terms + 1);
  return static_cast<double>(eigenvalues.size()) * std::pow(r, next) / (next * (1.0 - r));
}

long terms_for_tolerance(std::span<const double> eigenvalues, double k2, double tolerance) {
  if (!std::isfinite(geometric_tail_bound(eigenvalues, k2, 1))) {
    throw DomainError("series does not converge geometrically for this k2");
  }
  long hi = 1;
  while (geometric_tail_bound(eigenvalues, k2, hi) > tolerance) {
    if (hi > (1L << 40)) throw ResourceError("tolerance needs more than 2^40 terms");
    hi *= 2;
  }
  long lo = hi / 2;  // bound(lo) > tolerance unless lo == 0
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (geometric_tail_bound(eigenvalues, k2, mid) > tolerance) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double scale_by_index(double value, long index) {
  if (index < 1) throw DomainError("covering index must be a positive integer");
  return value / static_cast<double>(index);
}

}  // namespace knotlog
