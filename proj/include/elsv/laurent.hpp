#pragma once

#include "elsv/rational.hpp"

#include <map>
#include <string>

namespace elsv {

/// Finite Laurent polynomial in one variable with exact rational coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { add_term(0, c); } // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational& c, int power);
    /// x^power
    static LaurentPoly power(int power) { return monomial(1, power); }

    const std::map<int, Rational>& terms() const noexcept { return terms_; }
    Rational coefficient(int power) const;
    void add_term(int power, const Rational& c);

    bool is_zero() const noexcept { return terms_.empty(); }
    /// Only the x^0 term (or zero).
    bool is_constant() const noexcept;
    Rational constant_term() const { return coefficient(0); }
    int min_power() const;
    int max_power() const;

    /// Throws Error(invalid_argument) at x = 0 when negative powers occur.
    Rational evaluate(const Rational& x) const;
    LaurentPoly derivative() const;
    /// Drops terms above x^max_power.
    LaurentPoly truncated(int max_power) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// e.g. "3 + 1/2 u + 2 u^3"; "0" for the zero polynomial.
    std::string to_string(const std::string& var = "u") const;

private:
    std::map<int, Rational> terms_; // no zero coefficients
};

} // namespace elsv
