#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cdk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical p/q with q > 0, gcd(p, q) = 1.
Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and plain decimals such as "-0.125" or "1e-3"; exact.
Rational parse_rational(std::string_view text);

/// Always "p/q", including "0/1" and "3/1".
std::string to_fraction_string(const Rational& value);

}  // namespace cdk
