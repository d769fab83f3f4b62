#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "knotlog/error.hpp"
#include "knotlog/fox.hpp"
#include "knotlog/lueck.hpp"
#include "support/oracle.hpp"

using namespace knotlog;

namespace {

RingElem g(const std::string& s, long e = 1) { return RingElem(Word::generator(s, e)); }

RingMatrix torus_a(long p) {
  RingMatrix a(1, 1);
  for (long k = 0; k < p; ++k) a.at(0, 0).add_term(Word::generator("a", k), 1);
  return a;
}

RingMatrix diag_t_minus_one() {
  RingMatrix a(2, 2);
  a.at(0, 0) = g("t") - RingElem::one();
  a.at(1, 1) = g("t") - RingElem::one();
  return a;
}

Rational exact_term(const SeriesReport& r, std::size_t i) { return std::get<Rational>(r.terms.at(i).term); }

// (1/n) sum_j C(n,j) (-1/k2)^j w(j)
template <typename W>
Rational binomial_formula(long n, const Rational& k2, W&& w) {
  Rational sum = 0, pw = 1;
  for (long j = 0; j <= n; ++j) {
    sum += Rational(oracle::choose(n, j)) * pw * w(j);
    pw *= Rational(-1) / k2;
  }
  return sum / n;
}

}  // namespace

TEST_CASE("k_bound") {
  CHECK(k_bound(torus_a(2)) == 2);
  CHECK(k_bound(torus_a(3)) == 3);
  CHECK(k_bound(diag_t_minus_one()) == 8);
  CHECK_THROWS_AS(k_bound(RingMatrix(1, 1)), DomainError);
  CHECK_THROWS_AS(k_bound(RingMatrix(1, 2)), DomainError);
}

TEST_CASE("symbolic series on the trefoil matrix") {
  SeriesReport r = lueck_series_symbolic(torus_a(2), 4, 3);
  REQUIRE(r.terms.size() == 3);
  CHECK(exact_term(r, 0) == Rational(1, 2));
  CHECK(exact_term(r, 1) == Rational(3, 16));
  CHECK(exact_term(r, 2) == Rational(5, 48));
  CHECK(r.constant_part == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(r.estimate == doctest::Approx(std::log(4.0) - 19.0 / 24.0).epsilon(1e-14));
  CHECK(r.terms[2].partial_estimate == r.estimate);
  CHECK(r.k2 == "4/1");

  SeriesReport half = lueck_series_symbolic(torus_a(2), 2, 2);
  CHECK(exact_term(half, 0) == 0);
  CHECK(exact_term(half, 1) == Rational(1, 4));
  bool below_bound = false;
  for (const auto& c : half.caveats) below_bound |= c.find("below the sufficient bound") != std::string::npos;
  CHECK(below_bound);
}

TEST_CASE("zero matrix gives the harmonic series") {
  SeriesReport r = lueck_series_symbolic(RingMatrix(1, 1), 5, 6);
  for (long n = 1; n <= 6; ++n) CHECK(exact_term(r, static_cast<std::size_t>(n - 1)) == Rational(1, n));
  CHECK(r.caveats.size() == 2);
}

TEST_CASE("pure braid matrix") {
  SeriesReport r = lueck_series_symbolic(diag_t_minus_one(), 64, 1);
  CHECK(exact_term(r, 0) == Rational(31, 16));

  // The same value through the actual Fox Jacobian: the free-ring trace of the
  // commutator form still has identity coefficient 2 on each diagonal entry.
  RingMatrix a = delete_column(fox_jacobian(parse_presentation("<t,a,b|t*a=a*t,t*b=b*t>")), "t");
  SeriesReport via_fox = lueck_series_symbolic(a, 64, 1);
  CHECK(exact_term(via_fox, 0) == Rational(31, 16));

  CHECK_THROWS_AS(lueck_series_symbolic(a, 64, 8, RingLimits{4}), ResourceError);
}

TEST_CASE("symbolic series input errors") {
  CHECK_THROWS_AS(lueck_series_symbolic(RingMatrix(1, 2), 4, 3), DomainError);
  CHECK_THROWS_AS(lueck_series_symbolic(torus_a(2), 0, 3), DomainError);
  CHECK_THROWS_AS(lueck_series_symbolic(torus_a(2), 4, 0), DomainError);
}

TEST_CASE("group ring terms match the binomial formulas") {
  for (Rational k2 : {Rational(4), Rational(2), Rational(7, 3), Rational(5)}) {
    SeriesReport r = lueck_series_symbolic(torus_a(2), k2, 40);
    for (long n = 1; n <= 40; ++n) {
      Rational expected = binomial_formula(n, k2, [](long j) { return Rational(oracle::choose(2 * j, j)); });
      CHECK(exact_term(r, static_cast<std::size_t>(n - 1)) == expected);
      if (n <= 12) CHECK(expected == oracle::lueck_torus_term(2, k2, n));
    }
  }
  for (Rational k2 : {Rational(3), Rational(9), Rational(11, 2)}) {
    SeriesReport r = lueck_series_symbolic(torus_a(3), k2, 25);
    for (long n = 1; n <= 25; ++n) {
      Rational expected = binomial_formula(n, k2, [](long j) {
        Rational s = 0;
        for (long l = 0; l <= j; ++l) s += Rational(oracle::choose(2 * j, 2 * l) * oracle::choose(2 * l, l));
        return s;
      });
      CHECK(exact_term(r, static_cast<std::size_t>(n - 1)) == expected);
      if (n <= 10) CHECK(expected == oracle::lueck_torus_term(3, k2, n));
    }
  }
}

TEST_CASE("nonnegative terms give decreasing estimates") {
  for (Rational k2 : {Rational(4), Rational(9, 2), Rational(10)}) {
    SeriesReport r = lueck_series_symbolic(torus_a(2), k2, 30);
    double previous = r.constant_part;
    for (const auto& t : r.terms) {
      CHECK(std::get<Rational>(t.term) >= 0);
      CHECK(t.partial_estimate <= previous);
      previous = t.partial_estimate;
    }
  }
}

TEST_CASE("complex closed form examples") {
  Eigen::MatrixXcd two(1, 1);
  two(0, 0) = 2.0;
  ComplexLueckResult r = lueck_closed_form_complex(two, 4.0, 5);
  for (const auto& t : r.report.terms) CHECK(std::get<double>(t.term) == 0.0);
  CHECK(r.report.estimate == doctest::Approx(std::log(4.0)).epsilon(1e-15));
  CHECK(*r.report.reference == doctest::Approx(std::log(4.0)).epsilon(1e-15));

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  ComplexLueckResult dr = lueck_closed_form_complex(d, 4.0, 200);
  CHECK(std::abs(dr.report.estimate - 2.0 * std::log(2.0)) < 0.02);
  CHECK(dr.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(dr.eigenvalues[1] == doctest::Approx(4.0));

  Eigen::MatrixXcd u(2, 2);
  double c = std::cos(0.3), s = std::sin(0.3);
  u << std::complex<double>(c, 0), std::complex<double>(0, s), std::complex<double>(0, s), std::complex<double>(c, 0);
  ComplexLueckResult ur = lueck_closed_form_complex(u, 1.0, 10);
  CHECK(std::abs(ur.report.estimate) < 1e-12);
  CHECK(std::abs(*ur.report.reference) < 1e-12);
}

TEST_CASE("complex closed form errors and caveats") {
  Eigen::MatrixXcd singular(2, 2);
  singular << 1.0, 2.0, 2.0, 4.0;
  CHECK_THROWS_AS(lueck_closed_form_complex(singular, 30.0, 5), DomainError);
  CHECK_THROWS_AS(lueck_closed_form_complex(Eigen::MatrixXcd(2, 3), 1.0, 5), DomainError);
  Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(2, 2) * 3.0;
  CHECK_THROWS_AS(lueck_closed_form_complex(one, -1.0, 5), DomainError);
  ComplexLueckResult low = lueck_closed_form_complex(one, 4.0, 5);
  CHECK(low.report.caveats.size() == 1);
}

TEST_CASE("geometric tail bound holds on random matrices") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Index n = 2 + trial % 3;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {normal(rng), normal(rng)};
    }
    a += Eigen::MatrixXcd::Identity(n, n) * 3.0;
    ComplexLueckResult probe = lueck_closed_form_complex(a, 1.0, 1);
    double k2 = 1.05 * probe.eigenvalues.back();
    for (long terms : {10L, 100L, 1000L}) {
      ComplexLueckResult r = lueck_closed_form_complex(a, k2, terms);
      double bound = geometric_tail_bound(r.eigenvalues, k2, terms);
      CHECK(std::abs(r.report.estimate - *r.report.reference) <= bound + 1e-10);
    }
    long needed = terms_for_tolerance(probe.eigenvalues, k2, 1e-8);
    CHECK(geometric_tail_bound(probe.eigenvalues, k2, needed) <= 1e-8);
    CHECK(geometric_tail_bound(probe.eigenvalues, k2, needed - 1) > 1e-8);
  }
}

TEST_CASE("scale_by_index") {
  CHECK(scale_by_index(0.0, 6) == 0.0);
  CHECK(scale_by_index(12.0, 6) == 2.0);
  CHECK_THROWS_AS(scale_by_index(1.0, 0), DomainError);
}
