#include "elsv/laurent.hpp"

#include "elsv/error.hpp"

namespace elsv {

LaurentPoly LaurentPoly::monomial(const Rational& c, int power) {
    LaurentPoly p;
    p.add_term(power, c);
    return p;
}

Rational LaurentPoly::coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(int power, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool LaurentPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int LaurentPoly::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Rational LaurentPoly::evaluate(const Rational& x) const {
    if (x == 0 && min_power() < 0)
        fail(ErrorCode::invalid_argument, "evaluating a Laurent polynomial with negative powers at 0");
    Rational sum = 0;
    for (const auto& [k, c] : terms_) {
        Rational xp = k >= 0 ? pow(x, static_cast<unsigned>(k)) : Rational(1) / pow(x, static_cast<unsigned>(-k));
        sum += c * xp;
    }
    return sum;
}

LaurentPoly LaurentPoly::derivative() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_)
        out.add_term(k - 1, c * k);
    return out;
}

LaurentPoly LaurentPoly::truncated(int max_power) const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_)
        if (k <= max_power)
            out.terms_.emplace(k, c);
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            out.add_term(a + b, ca * cb);
    *this = std::move(out);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [k, c] : terms_)
        out.terms_.emplace(k, -c);
    return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += elsv::to_string(c);
        if (k == 1)
            s += " " + var;
        else if (k != 0)
            s += " " + var + "^" + std::to_string(k);
    }
    return s;
}

} // namespace elsv
