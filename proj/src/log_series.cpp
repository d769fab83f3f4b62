#include "knotlog/log_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "knotlog/error.hpp"

namespace knotlog {

BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("binom(" + std::to_string(n) + ", " + std::to_string(k) + ") needs 0 <= k <= n");
  }
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt central_binom(long j) {
  if (j < 0) throw DomainError("central_binom needs j >= 0");
  return binom(2 * j, j);
}

BigInt multinom3(long j, long l) {
  if (j < 0 || l < 0 || l > j) {
    throw DomainError("multinom3(" + std::to_string(j) + ", " + std::to_string(l) + ") needs 0 <= l <= j");
  }
  return binom(2 * j, 2 * l) * binom(2 * l, l);
}

const BigInt& BinomialTable::central(long j) {
  if (j < 0) throw DomainError("central_binom needs j >= 0");
  while (static_cast<long>(central_.size()) <= j) {
    long i = static_cast<long>(central_.size());
    // C(2i, i) = C(2i-2, i-1) * 2(2i-1) / i
    central_.push_back(i == 0 ? BigInt(1) : BigInt(central_.back() * 2 * (2 * i - 1) / i));
  }
  return central_[static_cast<std::size_t>(j)];
}

const BigInt& BinomialTable::trinomial_sum(long j) {
  if (j < 0) throw DomainError("trinomial_sum needs j >= 0");
  while (static_cast<long>(trinomial_.size()) <= j) {
    long i = static_cast<long>(trinomial_.size());
    BigInt sum = 0;
    for (long l = 0; l <= i; ++l) sum += multinom3(i, l);
    trinomial_.push_back(sum);
  }
  return trinomial_[static_cast<std::size_t>(j)];
}

std::vector<BigInt> BinomialTable::row(long n) {
  if (n < 0) throw DomainError("binomial row needs n >= 0");
  std::vector<BigInt> r(static_cast<std::size_t>(n) + 1);
  r[0] = 1;
  for (long k = 0; k < n; ++k) r[k + 1] = r[k] * (n - k) / (k + 1);
  return r;
}

namespace {

void require_terms(long terms) {
  if (terms < 1) throw DomainError("term count must be at least 1");
}

// sum_j row[j] (-q)^j p^(n-j) weight(j) / (n p^n) for the rational p/q.
template <typename Weight>
Rational binomial_transform(const Rational& value, long n, Weight&& weight) {
  if (n < 1) throw DomainError("term index must be at least 1");
  const BigInt& p = value.get_num();
  const BigInt& q = value.get_den();
  std::vector<BigInt> row = BinomialTable::row(n);
  std::vector<BigInt> p_pow(static_cast<std::size_t>(n) + 1);
  p_pow[0] = 1;
  for (long i = 1; i <= n; ++i) p_pow[i] = p_pow[i - 1] * p;
  BigInt sum = 0;
  BigInt q_pow = 1;  // (-q)^j
  for (long j = 0; j <= n; ++j) {
    sum += row[j] * q_pow * p_pow[n - j] * weight(j);
    q_pow *= -q;
  }
  Rational r(sum, BigInt(p_pow[n] * n));
  r.canonicalize();
  return r;
}

// Constant terms of P^n for a real Laurent polynomial P(a) = P(a^-1) with
// coefficients half[m] at a^m and a^-m. Averaging P over L equispaced points of
// the circle yields the sum of the coefficients of P^n at multiples of L:
// exact for L > 2 deg(P) n, otherwise the error is the aliased coefficients at
// +-L, +-2L, ... The grid doubles until two consecutive grids agree at the
// largest power needed. Relative accuracy of each term is about n * eps.
class ConstantTermSampler {
 public:
  ConstantTermSampler(std::vector<double> half, long max_power) : half_(std::move(half)) {
    const long degree = static_cast<long>(half_.size()) - 1;
    long exact_grid = 1;
    while (exact_grid <= 2 * degree * max_power) exact_grid *= 2;
    long grid = std::min<long>(64, exact_grid);
    while (grid < exact_grid) {
      auto coarse = sample(grid);
      auto fine = sample(2 * grid);
      double scale = 0.0;
      for (double v : fine) scale += std::pow(std::abs(v), static_cast<double>(max_power));
      scale /= static_cast<double>(fine.size());
      double diff = std::abs(mean_power(coarse, max_power) - mean_power(fine, max_power));
      grid *= 2;
      // Sample rounding is amplified n-fold by the power, so agreement is
      // judged at that level.
      if (diff <= 4.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(max_power) * scale) break;
    }
    values_ = sample(grid);
  }

  long grid() const { return static_cast<long>(values_.size()); }

  // Calls f(n, constant_term(P^n)) for n = first..last in order.
  template <typename F>
  void for_each(long first, long last, F&& f) const {
    std::vector<double> value = values_;
    std::vector<double> power(values_.size());
    for (std::size_t k = 0; k < values_.size(); ++k) {
      power[k] = std::pow(values_[k], static_cast<double>(first - 1));
    }
    const double inv = 1.0 / static_cast<double>(values_.size());
    for (long n = first; n <= last; ++n) {
      double sum = 0.0;
      for (std::size_t k = 0; k < value.size(); ++k) {
        power[k] *= value[k];
        sum += power[k];
      }
      f(n, sum * inv);
      // Samples whose powers have decayed out of range only cost subnormal
      // arithmetic; drop them.
      if (n % 64 == 0) {
        std::size_t kept = 0;
        for (std::size_t k = 0; k < value.size(); ++k) {
          if (std::abs(power[k]) < 1e-250) continue;
          value[kept] = value[k];
          power[kept] = power[k];
          ++kept;
        }
        value.resize(kept);
        power.resize(kept);
      }
    }
  }

 private:
  std::vector<double> sample(long grid) const {
    std::vector<double> v(static_cast<std::size_t>(grid));
    for (long k = 0; k < grid; ++k) {
      double value = half_[0];
      for (std::size_t m = 1; m < half_.size(); ++m) {
        long phase = (static_cast<long>(m) * k) % grid;
        value += 2.0 * half_[m] * std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(grid));
      }
      v[k] = value;
    }
    return v;
  }

  static double mean_power(const std::vector<double>& v, long n) {
    double sum = 0.0;
    for (double x : v) sum += std::pow(x, static_cast<double>(n));
    return sum / static_cast<double>(v.size());
  }

  std::vector<double> half_;
  std::vector<double> values_;
};

SeriesReport central_binomial_series(long terms, long exact_terms, long halve, const std::string& k2) {
  require_terms(terms);
  SeriesBuilder builder(k2, 0.0, Accumulation::add);
  builder.reserve(static_cast<std::size_t>(terms));
  builder.reference(std::log(static_cast<double>(4 / halve)));
  // c_n = C(2n,n)/4^n: c_1 = 1/2, c_{n+1} = c_n (2n+1)/(2n+2).
  double c = 0.5;
  BigInt four_pow = 4;
  for (long n = 1; n <= terms; ++n) {
    if (n <= exact_terms) {
      Rational exact(central_binom(n), BigInt(four_pow * n * halve));
      exact.canonicalize();
      builder.push(n, std::move(exact));
      four_pow *= 4;
    } else {
      builder.push(n, c / static_cast<double>(n * halve));
    }
    c *= static_cast<double>(2 * n + 1) / static_cast<double>(2 * n + 2);
  }
  return std::move(builder).finish();
}

}  // namespace

SeriesReport lehmer_ln4(long terms, long exact_terms) {
  return central_binomial_series(terms, exact_terms, 1, "4/1");
}

SeriesReport ln2_series(long terms, long exact_terms) {
  return central_binomial_series(terms, exact_terms, 2, "2/1");
}

Rational theorem4_term(const Rational& x, long n, BinomialTable& table) {
  if (x <= 0) throw DomainError("x must be positive");
  return binomial_transform(x, n, [&](long j) -> const BigInt& { return table.central(j); });
}

SeriesReport theorem4_ln(const Rational& x, long terms, long exact_terms) {
  require_terms(terms);
  if (x < 2) throw DomainError("theorem4_ln needs x >= 2, got " + rational_display(x));
  SeriesBuilder builder(rational_string(x), 0.0, Accumulation::add);
  builder.reserve(static_cast<std::size_t>(terms));
  builder.reference(log_rational(x));
  if (x < 4) {
    builder.caveat("x = " + rational_display(x) +
                   " lies below 4, outside the domain where the series is proven to converge");
  }
  BinomialTable table;
  // Constant terms c_n of (alpha + beta(a + 1/a))^n, alpha = 1 - 2/x,
  // beta = -1/x, obey
  //   n c_n = (2n-1) alpha c_{n-1} - (n-1)(alpha^2 - 4 beta^2) c_{n-2},
  // which is stable forward since the wanted solution is the dominant one.
  const double alpha = to_double(1 - Rational(2) / x);
  const double beta = to_double(Rational(-1) / x);
  const double gamma = alpha * alpha - 4.0 * beta * beta;
  double prev = 1.0, cur = alpha;  // c_0, c_1
  for (long n = 1; n <= terms; ++n) {
    if (n > 1) {
      double next = (static_cast<double>(2 * n - 1) * alpha * cur - static_cast<double>(n - 1) * gamma * prev) /
                    static_cast<double>(n);
      prev = cur;
      cur = next;
    }
    if (n <= exact_terms) {
      builder.push(n, theorem4_term(x, n, table));
    } else {
      builder.push(n, cur / static_cast<double>(n));
    }
  }
  return std::move(builder).finish();
}

Rational triple_sum_term(const Rational& k2, long n, BinomialTable& table) {
  if (k2 <= 0) throw DomainError("k2 must be positive");
  return binomial_transform(k2, n, [&](long j) -> const BigInt& { return table.trinomial_sum(j); });
}

SeriesReport triple_sum_ln(const Rational& k2, long terms, long exact_terms) {
  require_terms(terms);
  if (k2 <= 0) throw DomainError("k2 must be positive");
  SeriesBuilder builder(rational_string(k2), 0.0, Accumulation::add);
  builder.reserve(static_cast<std::size_t>(terms));
  builder.reference(log_rational(k2));
  if (k2 < 3) builder.caveat("k2 = " + rational_display(k2) + " is below 3");
  if (2 * k2 < 9) {
    builder.caveat("k2 < 9/2: |1 - (1+a+a^2)(1+a^-1+a^-2)/k2| exceeds 1 at a = 1, so the terms grow without bound");
  } else if (k2 < 9) {
    builder.caveat("k2 = " + rational_display(k2) + " is below the sufficient bound 9");
  }
  BinomialTable table;
  const long exact_last = std::min(terms, exact_terms);
  for (long n = 1; n <= exact_last; ++n) builder.push(n, triple_sum_term(k2, n, table));
  if (terms > exact_last) {
    // 1 - (a^-1 + 1 + a)^2 / k2 = (1 - 3/k2) - (2/k2)(a + 1/a) - (1/k2)(a^2 + 1/a^2)
    const double inv = to_double(1 / k2);
    ConstantTermSampler sampler({1.0 - 3.0 * inv, -2.0 * inv, -inv}, terms);
    sampler.for_each(exact_last + 1, terms,
                     [&](long n, double ct) { builder.push(n, ct / static_cast<double>(n)); });
  }
  return std::move(builder).finish();
}

Rational RationalPolynomial::evaluate(const Rational& y) const {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * y + *it;
  return acc;
}

RationalPolynomial f_poly(long n) {
  if (n < 1) throw DomainError("f_poly needs n >= 1");
  RationalPolynomial f;
  std::vector<BigInt> row = BinomialTable::row(n);
  BinomialTable table;
  for (long j = 0; j <= n; ++j) {
    Rational c(row[j] * table.central(j), BigInt(n));
    c.canonicalize();
    f.coefficients.push_back(std::move(c));
  }
  return f;
}

double genfun_closed(double x, double y) {
  double inner = 1.0 - x - 4.0 * x * y;
  if (!(x < 1.0) || !(inner > 0.0)) {
    throw DomainError("genfun_closed needs x < 1 and 1 - x - 4xy > 0");
  }
  // sqrt(1-x) + sqrt(1-x-4xy) = 2 + d with d computed without cancellation.
  double s1 = std::sqrt(1.0 - x);
  double s2 = std::sqrt(inner);
  double d = -x / (s1 + 1.0) - (x + 4.0 * x * y) / (s2 + 1.0);
  return -2.0 * std::log1p(d / 2.0);
}

double genfun_series(double x, double y, long terms) {
  require_terms(terms);
  Rational xr = exact_rational(x), yr = exact_rational(y);
  Rational sum = 0, x_pow = 1;
  for (long n = 1; n <= terms; ++n) {
    x_pow *= xr;
    sum += f_poly(n).evaluate(yr) * x_pow;
  }
  return sum.get_d();
}

double lehmer_identity_lhs(double z, long terms) {
  if (!(z > 0.0 && z <= 0.25)) throw DomainError("lehmer identity needs 0 < z <= 1/4");
  require_terms(terms);
  CompensatedSum sum;
  double c = 2.0 * z;  // C(2j,j) z^j at j = 1
  for (long j = 1; j <= terms; ++j) {
    sum.add(c / static_cast<double>(j));
    c *= 2.0 * static_cast<double>(2 * j + 1) / static_cast<double>(j + 1) * z;
  }
  return sum.value();
}

double lehmer_identity_rhs(double z) {
  if (!(z > 0.0 && z <= 0.25)) throw DomainError("lehmer identity needs 0 < z <= 1/4");
  // (1 - s)/(2z) = 2/(1 + s) = 1 + 4z/(1 + s)^2 with s = sqrt(1 - 4z).
  double s = std::sqrt(1.0 - 4.0 * z);
  return 2.0 * std::log1p(4.0 * z / ((1.0 + s) * (1.0 + s)));
}

}  // namespace knotlog
