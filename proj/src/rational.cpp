#include "elsv/rational.hpp"

#include "elsv/error.hpp"

#include <cctype>

namespace elsv {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        fail(ErrorCode::parse_error, "malformed rational '" + std::string(text) + "'");
    BigInt n(strip_plus(num)), d(strip_plus(den));
    if (d == 0)
        fail(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    return make_rational(n, d);
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational pow(const Rational& b, unsigned e) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), e);
    return make_rational(num, den);
}

BigInt pow(const BigInt& b, unsigned e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

} // namespace elsv
