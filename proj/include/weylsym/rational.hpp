#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace weylsym {

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator once canonicalized; every constructor below canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& q) { return q.get_str(); }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace weylsym
