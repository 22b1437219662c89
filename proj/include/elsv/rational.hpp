#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace elsv {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" text (just "p" for integers).
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "p", "-p" or "p/q"; throws Error(parse_error) otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

BigInt factorial(unsigned n);

/// b^e for a rational base and nonnegative exponent.
Rational pow(const Rational& b, unsigned e);
BigInt pow(const BigInt& b, unsigned e);

} // namespace elsv
