#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "knotlog/error.hpp"
#include "knotlog/mahler.hpp"
#include "support/oracle.hpp"

using namespace knotlog;

namespace {

MultiLaurent poly(std::string_view text) { return parse_laurent(text).poly; }

MultiLaurent x_var(std::size_t nvars = 1, std::size_t idx = 0) { return MultiLaurent::variable(nvars, idx); }

MultiLaurent c(long v, std::size_t nvars = 1) { return MultiLaurent::constant(nvars, v); }

QuadratureConfig grid(long m) {
  QuadratureConfig cfg;
  cfg.points_per_dim = m;
  return cfg;
}

}  // namespace

TEST_CASE("laurent parser") {
  ParsedLaurent p = parse_laurent("(t-1)^2");
  CHECK(p.variables == std::vector<std::string>{"t"});
  CHECK(p.poly.coefficient({2}) == 1);
  CHECK(p.poly.coefficient({1}) == -2);
  CHECK(p.poly.coefficient({0}) == 1);

  ParsedLaurent q = parse_laurent("x^-1 + 2 + x");
  CHECK(q.poly.coefficient({-1}) == 1);
  CHECK(q.poly.coefficient({0}) == 2);

  ParsedLaurent r = parse_laurent("1+x+y");
  CHECK(r.variables == std::vector<std::string>{"x", "y"});
  CHECK(r.poly.terms().size() == 3);

  CHECK(parse_laurent("7").variables == std::vector<std::string>{"x"});
  CHECK_THROWS_AS(parse_laurent("1+"), ParseError);
  CHECK_THROWS_AS(parse_laurent("(x"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x^y"), ParseError);
}

TEST_CASE("determinants") {
  LaurentMatrix a{2, 2, {c(1), x_var(), x_var(), c(1)}};
  CHECK(laurent_det(a) == poly("1-x^2"));

  LaurentMatrix empty{0, 0, {}};
  CHECK(laurent_det(empty, 2) == c(1, 2));

  LaurentMatrix tall{2, 1, {c(1), c(2)}};
  CHECK_THROWS_AS(laurent_det(tall), DomainError);

  LaurentMatrix big{9, 9, std::vector<MultiLaurent>(81, c(1))};
  CHECK_THROWS_AS(laurent_det(big), ResourceError);
}

TEST_CASE("triangular determinant is the diagonal product") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    LaurentMatrix m{n, n, std::vector<MultiLaurent>(n * n, MultiLaurent(2))};
    MultiLaurent product = c(1, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        MultiLaurent e(2);
        for (long k = -1; k <= 1; ++k) e.add_term({k, coeff(rng)}, coeff(rng));
        m.at(i, j) = e;
      }
      product = product * m.at(i, i);
    }
    CHECK(laurent_det(m) == product);
  }
}

TEST_CASE("one-variable measures") {
  for (long m : {2L, 64L, 4096L}) {
    MahlerResult r = mahler_measure(poly("1+x"), grid(m));
    CHECK(r.value == doctest::Approx(std::numbers::ln2 / static_cast<double>(m)).epsilon(1e-9));
    CHECK(r.active_variables == 1);
    CHECK(r.evaluations == static_cast<std::uint64_t>(m));
  }
  CHECK(std::abs(mahler_measure(poly("(x-1)^2")).value) < 1e-4);

  MahlerResult two = mahler_measure(poly("x-2"), grid(256));
  CHECK(two.value == doctest::Approx(oracle::jensen(1.0, {2.0})).epsilon(1e-14));
  double brute = oracle::simpson_log_abs([](std::complex<double> z) { return z - 2.0; }, 2000);
  CHECK(two.value == doctest::Approx(brute).epsilon(1e-10));

  MahlerResult constant = mahler_measure(c(-3));
  CHECK(constant.value == doctest::Approx(std::log(3.0)));
  CHECK(constant.active_variables == 0);
}

TEST_CASE("two-variable measure of 1+x+y") {
  MahlerResult r = mahler_measure(poly("1+x+y"), grid(4096));
  CHECK(r.active_variables == 2);
  CHECK(std::abs(r.value - 0.3230659472194505) < 5e-3);
}

TEST_CASE("Jensen's formula for roots off the circle") {
  std::mt19937_64 rng(11);
  const std::vector<Rational> pool{2, -2, 3, Rational(5, 2), Rational(-3, 2), Rational(1, 2), Rational(-1, 3),
                                   Rational(2, 5)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    long lead = 1 + trial % 5;
    MultiLaurent p = c(lead);
    std::vector<std::complex<double>> roots;
    for (int k = 0; k < 1 + trial % 5; ++k) {
      Rational r = pool[pick(rng)];
      p = p * (x_var() - MultiLaurent::constant(1, r));
      roots.emplace_back(to_double(r));
    }
    CHECK(mahler_measure(p, grid(1024)).value ==
          doctest::Approx(oracle::jensen(static_cast<double>(lead), roots)).epsilon(1e-10));
  }
}

TEST_CASE("additivity and monomial invariance") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coeff(-4, 4);
  auto random_poly = [&](std::size_t nvars) {
    MultiLaurent p(nvars);
    while (p.is_zero()) {
      for (int k = 0; k < 4; ++k) {
        Exponents e(nvars);
        for (auto& v : e) v = coeff(rng) / 2;
        p.add_term(e, coeff(rng));
      }
    }
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t nvars = 1 + static_cast<std::size_t>(trial % 2);
    QuadratureConfig cfg = grid(nvars == 1 ? 512 : 64);
    MultiLaurent p = random_poly(nvars), q = random_poly(nvars);
    MahlerResult mp = mahler_measure(p, cfg), mq = mahler_measure(q, cfg), mpq = mahler_measure(p * q, cfg);
    if (mp.clamped + mq.clamped + mpq.clamped == 0) {
      CHECK(mpq.value == doctest::Approx(mp.value + mq.value).epsilon(1e-10));
    }
    Exponents shift(nvars);
    for (auto& v : shift) v = coeff(rng);
    CHECK(mahler_measure(MultiLaurent::monomial(shift, 1) * p, cfg).value == mp.value);
  }
}

TEST_CASE("refining the grid helps on a singular integrand") {
  double coarse = mahler_measure(poly("1+x"), grid(256)).value;
  double fine = mahler_measure(poly("1+x"), grid(512)).value;
  CHECK(fine < coarse);
}

TEST_CASE("quadrature errors") {
  CHECK_THROWS_AS(mahler_measure(MultiLaurent(1)), DomainError);
  CHECK_THROWS_AS(mahler_measure(poly("1+x"), grid(7)), DomainError);
  CHECK_THROWS_AS(mahler_measure(poly("1+x+y+z+w"), grid(4)), ResourceError);
  QuadratureConfig bad_floor;
  bad_floor.singularity_floor = 0;
  CHECK_THROWS_AS(mahler_measure(poly("1+x"), bad_floor), DomainError);
  QuadratureConfig capped = grid(1024);
  capped.max_points = 1000;
  CHECK_THROWS_AS(mahler_measure(poly("1+x+y"), capped), ResourceError);
}

TEST_CASE("pipeline on the pure braid presentation") {
  Presentation p = parse_presentation("<t,a,b|t*a=a*t,t*b=b*t>");
  PipelineResult r = mahler_of_presentation(p, "t", parse_homomorphism("t=x,a=1,b=1"));
  CHECK(r.determinant == poly("(x-1)^2"));
  CHECK(std::abs(r.value) < 1e-4);
  CHECK(r.value == 2.0 * r.measure.value);
  CHECK(r.deleted == "t");

  Presentation torus = parse_presentation("<a,b|a^3=b^2>");
  PipelineResult t = mahler_of_presentation(torus, "b", parse_homomorphism("a=x"));
  CHECK(std::abs(t.value) < 1e-4);
  CHECK_FALSE(t.caveats.empty());

  Presentation wide = parse_presentation("<a,b,c|a*b*c>");
  CHECK_THROWS_AS(mahler_of_presentation(wide, "c", parse_homomorphism("a=x,b=x,c=x")), DomainError);
}
