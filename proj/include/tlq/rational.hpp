#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace tlq {

// Arbitrary-precision rationals, kept in canonical (reduced, positive
// denominator) form by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

// Canonicalizing constructor; mpq_class(n, d) alone does not reduce.
Rational rat(long num, long den = 1);
Rational rat(const Integer& num, const Integer& den);

// Accepts "p" or "p/q" with arbitrary-precision integers.
Rational rat_from_string(const std::string& s);

std::string to_string(const Rational& r);

// Exact square root if r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace tlq
