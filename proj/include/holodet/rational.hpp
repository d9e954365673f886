#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "holodet/errors.hpp"

namespace holodet {

// Exact rational scalar. GMP keeps the invariants we need: gcd(|num|, den) = 1,
// den >= 1, zero is 0/1 (mpq_class canonicalizes on construction and after
// every arithmetic operation).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", "p/q". Used by the CLI and the JSON coefficient format.
Rational parse_rational(const std::string& s);

// "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

// True mathematical floor: greatest integer <= q, also for negative q.
long rational_floor(const Rational& q);

bool is_integer(const Rational& q);

Rational rational_pow(const Rational& base, long exp);

Rational factorial(long n);

}  // namespace holodet
