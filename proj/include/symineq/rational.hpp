#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symineq {

// All verdict-relevant arithmetic in this library runs on exact rationals.
// Rat is kept canonical (reduced, positive denominator) at all times.
using Rat = mpq_class;
using Int = mpz_class;

/// Exact rational num/den. Throws std::domain_error on den == 0.
Rat rat(long num, long den = 1);

/// Parses "p/q" or "p" (optional sign, optional surrounding whitespace).
/// Throws std::invalid_argument on malformed input, std::domain_error on
/// zero denominator.
Rat rat_parse(const std::string& text);

/// Serializes as "p/q", or "p" when the denominator is 1. Inverse of
/// rat_parse; never loses precision.
std::string rat_str(const Rat& q);

Rat rat_pow(const Rat& base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

/// Binomial coefficient C(n, k) with n, k >= 0.
Int binom(unsigned long n, unsigned long k);

/// gcd extended to rationals: gcd(a/b, c/d) = gcd(ad, cb)/(bd), nonnegative.
/// gcd(0, x) = |x|.
Rat rat_gcd(const Rat& a, const Rat& b);

}  // namespace symineq
