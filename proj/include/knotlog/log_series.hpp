#pragma once

#include <vector>

#include "knotlog/rational.hpp"
#include "knotlog/series.hpp"

namespace knotlog {

BigInt binom(long n, long k);
BigInt central_binom(long j);
// (2j)! / ((2j-2l)! l! l!)
BigInt multinom3(long j, long l);

// Caches central binomials C(2j, j) and the trinomial sums
// sum_l multinom3(j, l), the constant term of (x^-1 + 1 + x)^(2j).
class BinomialTable {
 public:
  const BigInt& central(long j);
  const BigInt& trinomial_sum(long j);
  // Row C(n, 0..n).
  static std::vector<BigInt> row(long n);

 private:
  std::vector<BigInt> central_;
  std::vector<BigInt> trinomial_;
};

// Default count of leading terms computed in exact rational arithmetic.
inline constexpr long kExactTerms = 64;

// sum_{n<=N} (1/n) C(2n,n) / 4^n  ->  ln 4.
SeriesReport lehmer_ln4(long terms, long exact_terms = kExactTerms);
// sum_{n<=N} (1/(2n)) C(2n,n) / 4^n  ->  ln 2.
SeriesReport ln2_series(long terms, long exact_terms = kExactTerms);

// (1/n) sum_j C(n,j) C(2j,j) (-1/x)^j, exactly.
Rational theorem4_term(const Rational& x, long n, BinomialTable& table);
// Partial sums of sum_n theorem4_term(x, n)  ->  ln x. x in [2, 4) carries a
// caveat; x < 2 throws DomainError.
SeriesReport theorem4_ln(const Rational& x, long terms, long exact_terms = kExactTerms);

// (1/n) sum_j C(n,j) (-1/k2)^j sum_l multinom3(j, l), exactly.
Rational triple_sum_term(const Rational& k2, long n, BinomialTable& table);
// Partial sums converging to ln k2. k2 below 3 only adds a caveat.
SeriesReport triple_sum_ln(const Rational& k2, long terms, long exact_terms = kExactTerms);

struct RationalPolynomial {
  std::vector<Rational> coefficients;  // ascending powers

  long degree() const { return static_cast<long>(coefficients.size()) - 1; }
  Rational evaluate(const Rational& y) const;
};

// f_n(y) = sum_j (1/n) C(n,j) C(2j,j) y^j.
RationalPolynomial f_poly(long n);

// ln 4 - 2 ln(sqrt(1-x) + sqrt(1-x-4xy)), on the real branch x < 1,
// 1 - x - 4xy > 0.
double genfun_closed(double x, double y);
// sum_{n<=N} f_n(y) x^n, summed exactly in the binary values of x and y.
double genfun_series(double x, double y, long terms);

// sum_{j<=J} (1/j) C(2j,j) z^j for 0 < z <= 1/4.
double lehmer_identity_lhs(double z, long terms);
// 2 log((1 - sqrt(1-4z)) / (2z)).
double lehmer_identity_rhs(double z);

}  // namespace knotlog
