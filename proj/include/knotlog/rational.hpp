#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace knotlog {

using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", integers and decimals with an optional exponent
// ("0.25", "-1.5e-3"). Decimals convert exactly. Throws ParseError.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0, e.g. "3/1", "-1/4".
std::string rational_string(const Rational& r);

// Human form: integers without a denominator.
std::string rational_display(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }

// Exact rational value of a finite double.
Rational exact_rational(double value);

}  // namespace knotlog
