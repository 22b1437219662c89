#include "elsv/eqcoh.hpp"

#include "elsv/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace elsv {

// ---------------------------------------------------------------------------
// WeightMultiset

WeightMultiset::WeightMultiset(std::initializer_list<Rational> weights) {
    for (const auto& w : weights)
        add(w);
}

void WeightMultiset::add(const Rational& weight, long multiplicity) {
    if (multiplicity == 0)
        return;
    auto it = terms_.find(weight);
    if (it == terms_.end()) {
        terms_.emplace(weight, multiplicity);
        return;
    }
    it->second += multiplicity;
    if (it->second == 0)
        terms_.erase(it);
}

long WeightMultiset::multiplicity(const Rational& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

long WeightMultiset::rank() const {
    long n = 0;
    for (const auto& [w, m] : terms_)
        n += m;
    return n;
}

BigInt WeightMultiset::common_denominator() const {
    BigInt d = 1;
    for (const auto& [w, m] : terms_)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), w.get_den_mpz_t());
    return d;
}

WeightMultiset& WeightMultiset::operator+=(const WeightMultiset& o) {
    for (const auto& [w, m] : o.terms_)
        add(w, m);
    return *this;
}

WeightMultiset& WeightMultiset::operator-=(const WeightMultiset& o) {
    for (const auto& [w, m] : o.terms_)
        add(w, -m);
    return *this;
}

LaurentPoly WeightMultiset::euler_class() const {
    Rational c = 1;
    long power = 0;
    for (const auto& [w, m] : terms_) {
        if (w == 0)
            fail(ErrorCode::invalid_argument, "Euler class of a zero weight");
        const Rational f = pow(w, static_cast<unsigned>(m > 0 ? m : -m));
        c = m > 0 ? Rational(c * f) : Rational(c / f);
        power += m;
    }
    return LaurentPoly::monomial(c, static_cast<int>(power));
}

std::string WeightMultiset::to_string() const {
    const bool genuine = std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
    std::string s = "{";
    bool first = true;
    for (const auto& [w, m] : terms_) {
        if (genuine) {
            for (long k = 0; k < m; ++k) {
                s += (first ? "" : ", ") + elsv::to_string(w);
                first = false;
            }
        } else {
            s += (first ? "" : ", ") + elsv::to_string(w) + ":" + std::to_string(m);
            first = false;
        }
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// P^1 and its cyclic covers

PoleWeights fixed_point_weights_p1(long a, long k) {
    return PoleWeights{Rational(1), Rational(-1), Rational(a), Rational(a - k)};
}

std::vector<FixedPoint> fixed_points_p1(long k, long a) { return fixed_points_cover(k, a, 1); }

std::vector<FixedPoint> fixed_points_cover(long k, long a, long d) {
    if (d < 1)
        fail(ErrorCode::invalid_argument, "cover degree must be positive");
    const Rational t = make_rational(1, d);
    return {FixedPoint{WeightMultiset{t}, WeightMultiset{Rational(a)}},
            FixedPoint{WeightMultiset{Rational(-t)}, WeightMultiset{Rational(a - k)}}};
}

std::pair<WeightMultiset, WeightMultiset> pushforward_char_p1(long k, long a) {
    return pushforward_char_cover(k, a, 1);
}

std::pair<WeightMultiset, WeightMultiset> pushforward_char_cover(long k, long a, long d) {
    if (d < 1)
        fail(ErrorCode::invalid_argument, "cover degree must be positive");
    WeightMultiset h0, h1;
    if (k >= 0) {
        for (long i = 0; i <= k * d; ++i)
            h0.add(Rational(a) - make_rational(i, d));
    } else {
        for (long i = 1; i <= -k * d - 1; ++i)
            h1.add(Rational(a) + make_rational(i, d));
    }
    return {h0, h1};
}

namespace {

void check_tangents(const std::vector<FixedPoint>& fps) {
    for (const auto& fp : fps)
        if (fp.tangent.multiplicity(0) != 0)
            fail(ErrorCode::invalid_fixed_point, "zero tangent weight at a fixed point");
}

long scaled(const Rational& w, const BigInt& D) {
    Rational s = w * Rational(D);
    if (s.get_den() != 1)
        fail(ErrorCode::internal_consistency, "weight not integral after scaling");
    return s.get_num().get_si();
}

// sum m q^{wD}
LaurentPoly character_in_q(const WeightMultiset& ws, const BigInt& D) {
    LaurentPoly p;
    for (const auto& [w, m] : ws.terms())
        p.add_term(static_cast<int>(scaled(w, D)), Rational(m));
    return p;
}

LaurentPoly ipow(const LaurentPoly& p, long e) {
    LaurentPoly r = 1;
    for (long i = 0; i < e; ++i)
        r *= p;
    return r;
}

} // namespace

bool grr_localization_check(const std::vector<FixedPoint>& fixed_points, const WeightMultiset& claimed) {
    check_tangents(fixed_points);
    BigInt D = claimed.common_denominator();
    for (const auto& fp : fixed_points) {
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), fp.tangent.common_denominator().get_mpz_t());
        mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), fp.fiber.common_denominator().get_mpz_t());
    }
    // Each fixed point contributes num_j / den_j with den_j = prod (1 - q^{-xD})^m.
    std::vector<LaurentPoly> num, den;
    for (const auto& fp : fixed_points) {
        LaurentPoly n = character_in_q(fp.fiber, D);
        LaurentPoly dd = 1;
        for (const auto& [x, m] : fp.tangent.terms()) {
            LaurentPoly f = LaurentPoly(1) - LaurentPoly::power(static_cast<int>(-scaled(x, D)));
            if (m > 0)
                dd *= ipow(f, m);
            else
                n *= ipow(f, -m);
        }
        num.push_back(std::move(n));
        den.push_back(std::move(dd));
    }
    LaurentPoly all_den = 1;
    for (const auto& d : den)
        all_den *= d;
    LaurentPoly lhs;
    for (std::size_t j = 0; j < num.size(); ++j) {
        LaurentPoly t = num[j];
        for (std::size_t k = 0; k < den.size(); ++k)
            if (k != j)
                t *= den[k];
        lhs += t;
    }
    return lhs == character_in_q(claimed, D) * all_den;
}

namespace {

using Series = std::vector<Rational>; // power series truncated to size()

Series series_mul(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_inverse(const Series& a) {
    const std::size_t n = a.size();
    Series b(n, Rational(0));
    b[0] = 1 / a[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rational s = 0;
        for (std::size_t j = 1; j <= k; ++j)
            s += a[j] * b[k - j];
        b[k] = -s / a[0];
    }
    return b;
}

// sum m e^{w u}
Series exp_character(const WeightMultiset& ws, std::size_t n) {
    Series s(n, Rational(0));
    for (const auto& [w, m] : ws.terms()) {
        Rational t = Rational(m);
        for (std::size_t k = 0; k < n; ++k) {
            s[k] += t;
            t = t * w / Rational(static_cast<long>(k + 1));
        }
    }
    return s;
}

// (1 - e^{-xu}) / u
Series one_minus_exp_over_u(const Rational& x, std::size_t n) {
    Series s(n, Rational(0));
    Rational t = -x; // (-x)^1 / 1!
    for (std::size_t k = 0; k < n; ++k) {
        s[k] = -t;
        t = t * (-x) / Rational(static_cast<long>(k + 2));
    }
    return s;
}

} // namespace

LaurentPoly grr_series_difference(const std::vector<FixedPoint>& fixed_points, const WeightMultiset& claimed,
                                  int order) {
    check_tangents(fixed_points);
    if (order < 0)
        fail(ErrorCode::invalid_argument, "series order must be nonnegative");
    LaurentPoly diff;
    for (const auto& fp : fixed_points) {
        const long shift = fp.tangent.rank(); // the term carries u^{-shift}
        const std::size_t n = static_cast<std::size_t>(order + std::max<long>(shift, 0) + 1);
        Series s = exp_character(fp.fiber, n);
        for (const auto& [x, m] : fp.tangent.terms()) {
            Series f = one_minus_exp_over_u(x, n);
            if (m > 0)
                f = series_inverse(f);
            for (long i = 0; i < std::abs(m); ++i)
                s = series_mul(s, f);
        }
        for (std::size_t k = 0; k < n; ++k) {
            const long p = static_cast<long>(k) - shift;
            if (p <= order)
                diff.add_term(static_cast<int>(p), s[k]);
        }
    }
    const Series c = exp_character(claimed, static_cast<std::size_t>(order + 1));
    for (int k = 0; k <= order; ++k)
        diff.add_term(k, -c[static_cast<std::size_t>(k)]);
    return diff;
}

// ---------------------------------------------------------------------------
// H^*_T(P^r)

EquivariantPolyRing::EquivariantPolyRing(std::vector<long> lift_weights) : weights_(std::move(lift_weights)) {
    if (weights_.empty())
        fail(ErrorCode::invalid_argument, "P^r needs at least one coordinate");
    auto sorted = weights_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::invalid_argument, "lift weights must be pairwise distinct");
    // prod_i (H + a_i u), coefficients low to high
    std::vector<LaurentPoly> p{LaurentPoly(1)};
    for (long a : weights_) {
        std::vector<LaurentPoly> q(p.size() + 1);
        const LaurentPoly au = LaurentPoly::monomial(Rational(a), 1);
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] += p[k] * au;
        }
        p = std::move(q);
    }
    relation_.resize(weights_.size());
    for (std::size_t k = 0; k < weights_.size(); ++k)
        relation_[k] = -p[k];
}

EquivariantPolyRing EquivariantPolyRing::projective_space(int r) {
    if (r < 0)
        fail(ErrorCode::invalid_argument, "dimension must be nonnegative");
    std::vector<long> a;
    for (int i = 0; i <= r; ++i)
        a.push_back(-i);
    return EquivariantPolyRing(std::move(a));
}

EquivariantPolyRing::Element EquivariantPolyRing::reduce(std::vector<LaurentPoly> coeffs) const {
    const std::size_t n = weights_.size(); // r + 1
    for (std::size_t top = coeffs.size(); top-- > n;) {
        LaurentPoly c = std::move(coeffs[top]);
        coeffs.pop_back();
        if (c.is_zero())
            continue;
        for (std::size_t k = 0; k < n; ++k)
            coeffs[top - n + k] += c * relation_[k];
    }
    coeffs.resize(n);
    return Element{std::move(coeffs)};
}

EquivariantPolyRing::Element EquivariantPolyRing::constant(const LaurentPoly& c) const { return reduce({c}); }

EquivariantPolyRing::Element EquivariantPolyRing::hyperplane() const {
    return reduce({LaurentPoly(), LaurentPoly(1)});
}

EquivariantPolyRing::Element EquivariantPolyRing::add(const Element& a, const Element& b) const {
    std::vector<LaurentPoly> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k)
        c[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k)
        c[k] += b.coeffs[k];
    return reduce(std::move(c));
}

EquivariantPolyRing::Element EquivariantPolyRing::multiply(const Element& a, const Element& b) const {
    if (a.coeffs.empty() || b.coeffs.empty())
        return reduce({});
    std::vector<LaurentPoly> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += a.coeffs[i] * b.coeffs[j];
    return reduce(std::move(c));
}

LaurentPoly EquivariantPolyRing::restrict_to(const Element& e, int i) const {
    if (i < 0 || i > dimension())
        fail(ErrorCode::invalid_argument, "fixed point index out of range");
    const LaurentPoly h = LaurentPoly::monomial(Rational(-weights_[static_cast<std::size_t>(i)]), 1);
    LaurentPoly v, hk = 1;
    for (const auto& c : e.coeffs) {
        v += c * hk;
        hk *= h;
    }
    return v;
}

EquivariantPolyRing::Element EquivariantPolyRing::point_class(int i) const {
    if (i < 0 || i > dimension())
        fail(ErrorCode::invalid_argument, "fixed point index out of range");
    Element e = constant(1);
    for (int j = 0; j <= dimension(); ++j)
        if (j != i)
            e = multiply(e, add(hyperplane(),
                                constant(LaurentPoly::monomial(Rational(weights_[static_cast<std::size_t>(j)]), 1))));
    return e;
}

LaurentPoly ab_integrate(const EquivariantPolyRing& ring, const EquivariantPolyRing::Element& e) {
    const auto& a = ring.lift_weights();
    const int r = ring.dimension();
    LaurentPoly total;
    for (int i = 0; i <= r; ++i) {
        BigInt tangent = 1;
        for (int j = 0; j <= r; ++j)
            if (j != i)
                tangent *= a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)];
        total += ring.restrict_to(e, i) * LaurentPoly::monomial(make_rational(1, tangent), -r);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Hodge class algebra

int HodgeMonomial::degree() const {
    return std::accumulate(psi.begin(), psi.end(), 0) + std::accumulate(lambdas.begin(), lambdas.end(), 0);
}

HodgeClassPoly::HodgeClassPoly(int g, int h) : g_(g), h_(h) { require_stable(g, h); }

HodgeClassPoly HodgeClassPoly::constant(int g, int h, const LaurentPoly& c) {
    HodgeClassPoly p(g, h);
    p.add_term(HodgeMonomial{std::vector<int>(static_cast<std::size_t>(h), 0), {}}, c);
    return p;
}

HodgeClassPoly HodgeClassPoly::psi(int g, int h, int i) {
    if (i < 1 || i > h)
        fail(ErrorCode::invalid_argument, "psi index out of range");
    HodgeClassPoly p(g, h);
    HodgeMonomial m{std::vector<int>(static_cast<std::size_t>(h), 0), {}};
    m.psi[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(m, 1);
    return p;
}

HodgeClassPoly HodgeClassPoly::lambda(int g, int h, int i) {
    if (i < 0)
        fail(ErrorCode::invalid_argument, "lambda index must be nonnegative");
    if (i == 0)
        return constant(g, h, 1);
    HodgeClassPoly p(g, h);
    if (i <= g)
        p.add_term(HodgeMonomial{std::vector<int>(static_cast<std::size_t>(h), 0), {i}}, 1);
    return p;
}

HodgeClassPoly HodgeClassPoly::dual_hodge_euler(int g, int h, const Rational& weight) {
    HodgeClassPoly p(g, h);
    for (int i = 0; i <= g; ++i) {
        const Rational c = (i % 2 ? Rational(-1) : Rational(1)) * pow(weight, static_cast<unsigned>(g - i));
        p += lambda(g, h, i) * LaurentPoly::monomial(c, g - i);
    }
    return p;
}

HodgeClassPoly HodgeClassPoly::inverse_linear(int g, int h, const Rational& alpha, const Rational& beta, int i) {
    if (alpha == 0)
        fail(ErrorCode::invalid_argument, "inverse_linear needs a nonzero u coefficient");
    HodgeClassPoly p(g, h);
    HodgeMonomial m{std::vector<int>(static_cast<std::size_t>(h), 0), {}};
    if (i < 1 || i > h)
        fail(ErrorCode::invalid_argument, "psi index out of range");
    const Rational ratio = beta / alpha;
    for (int j = 0; j <= p.max_degree(); ++j) {
        m.psi[static_cast<std::size_t>(i - 1)] = j;
        p.add_term(m, LaurentPoly::monomial(pow(ratio, static_cast<unsigned>(j)) / alpha, -1 - j));
    }
    return p;
}

void HodgeClassPoly::add_term(const HodgeMonomial& m, const LaurentPoly& c) {
    if (static_cast<int>(m.psi.size()) != h_)
        fail(ErrorCode::invalid_argument, "monomial has the wrong number of psi exponents");
    if (!std::is_sorted(m.lambdas.begin(), m.lambdas.end()) ||
        std::any_of(m.lambdas.begin(), m.lambdas.end(), [](int i) { return i < 1; }))
        fail(ErrorCode::invalid_argument, "lambda indices must be sorted and positive");
    if (std::any_of(m.psi.begin(), m.psi.end(), [](int e) { return e < 0; }))
        fail(ErrorCode::invalid_argument, "psi exponents must be nonnegative");
    if (c.is_zero() || m.degree() > max_degree() ||
        std::any_of(m.lambdas.begin(), m.lambdas.end(), [&](int i) { return i > g_; }))
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

namespace {
void require_same_space(const HodgeClassPoly& a, const HodgeClassPoly& b) {
    if (a.g() != b.g() || a.h() != b.h())
        fail(ErrorCode::dimension_mismatch, "Hodge classes live on different moduli spaces");
}
} // namespace

HodgeClassPoly& HodgeClassPoly::operator+=(const HodgeClassPoly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

HodgeClassPoly& HodgeClassPoly::operator-=(const HodgeClassPoly& o) {
    require_same_space(*this, o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

HodgeClassPoly& HodgeClassPoly::operator*=(const HodgeClassPoly& o) {
    require_same_space(*this, o);
    HodgeClassPoly out(g_, h_);
    for (const auto& [ma, ca] : terms_) {
        const int da = ma.degree();
        for (const auto& [mb, cb] : o.terms_) {
            if (da + mb.degree() > max_degree())
                continue;
            HodgeMonomial m{ma.psi, ma.lambdas};
            for (std::size_t k = 0; k < m.psi.size(); ++k)
                m.psi[k] += mb.psi[k];
            m.lambdas.insert(m.lambdas.end(), mb.lambdas.begin(), mb.lambdas.end());
            std::sort(m.lambdas.begin(), m.lambdas.end());
            out.add_term(m, ca * cb);
        }
    }
    *this = std::move(out);
    return *this;
}

HodgeClassPoly& HodgeClassPoly::operator*=(const LaurentPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

HodgeClassPoly HodgeClassPoly::degree_part(int k) const {
    HodgeClassPoly p(g_, h_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == k)
            p.terms_.emplace(m, c);
    return p;
}

HodgeClassPoly HodgeClassPoly::substitute_u(const Rational& a) const {
    if (a == 0)
        fail(ErrorCode::invalid_argument, "u must be specialized to a nonzero value");
    HodgeClassPoly p(g_, h_);
    for (const auto& [m, c] : terms_)
        p.add_term(m, c.evaluate(a));
    return p;
}

std::string HodgeClassPoly::to_string() const {
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string factors;
        for (std::size_t k = 0; k < m.psi.size(); ++k) {
            if (m.psi[k] == 0)
                continue;
            factors += " psi" + std::to_string(k + 1);
            if (m.psi[k] > 1)
                factors += "^" + std::to_string(m.psi[k]);
        }
        for (int i : m.lambdas)
            factors += " lam" + std::to_string(i);
        for (const auto& [k, q] : c.terms()) {
            if (!out.empty())
                out += " + ";
            out += elsv::to_string(q);
            if (k == 1)
                out += " u";
            else if (k != 0)
                out += " u^" + std::to_string(k);
            out += factors;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    if (s.empty())
        fail(ErrorCode::parse_error, "missing " + std::string(what));
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        pos = 1;
    }
    if (pos == s.size())
        fail(ErrorCode::parse_error, "malformed " + std::string(what));
    long v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9' || v > 100000)
            fail(ErrorCode::parse_error, "malformed " + std::string(what) + " '" + std::string(s) + "'");
        v = v * 10 + (s[pos] - '0');
    }
    return static_cast<int>(neg ? -v : v);
}

// "psi3^2" -> (3, 2); "lam1" -> (1, 1)
std::pair<int, int> parse_indexed(std::string_view tok, std::string_view stem) {
    tok.remove_prefix(stem.size());
    const auto caret = tok.find('^');
    const int index = parse_int(tok.substr(0, caret), "index");
    const int exponent = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), "exponent");
    return {index, exponent};
}

} // namespace

HodgeClassPoly HodgeClassPoly::parse(std::string_view text, int g, int h) {
    HodgeClassPoly p(g, h);
    if (text == "0")
        return p;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(" + ", start);
        std::string_view term = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        std::istringstream in{std::string(term)};
        std::string tok;
        if (!(in >> tok))
            fail(ErrorCode::parse_error, "empty term in Hodge class");
        const Rational c = parse_rational(tok);
        int upow = 0;
        HodgeMonomial m{std::vector<int>(static_cast<std::size_t>(h), 0), {}};
        while (in >> tok) {
            if (tok == "u") {
                upow += 1;
            } else if (tok.rfind("u^", 0) == 0) {
                upow += parse_int(std::string_view(tok).substr(2), "u exponent");
            } else if (tok.rfind("psi", 0) == 0) {
                auto [i, e] = parse_indexed(tok, "psi");
                if (i < 1 || i > h || e < 0)
                    fail(ErrorCode::parse_error, "psi factor out of range: " + tok);
                m.psi[static_cast<std::size_t>(i - 1)] += e;
            } else if (tok.rfind("lam", 0) == 0) {
                auto [i, e] = parse_indexed(tok, "lam");
                if (i < 1 || e < 0)
                    fail(ErrorCode::parse_error, "lambda factor out of range: " + tok);
                for (int k = 0; k < e; ++k)
                    m.lambdas.push_back(i);
            } else {
                fail(ErrorCode::parse_error, "unknown factor '" + tok + "'");
            }
        }
        std::sort(m.lambdas.begin(), m.lambdas.end());
        p.add_term(m, LaurentPoly::monomial(c, upow));
        if (end == std::string_view::npos)
            break;
        start = end + 3;
    }
    return p;
}

TopIntegral integrate_top(const HodgeClassPoly& cls, const HodgeTable& table) {
    const int top = cls.max_degree();
    TopIntegral out;
    for (const auto& [m, c] : cls.terms()) {
        if (m.degree() != top)
            continue;
        if (m.lambdas.size() > 1)
            fail(ErrorCode::unsupported_range, "integrand has a non-linear Hodge monomial");
        const int li = m.lambdas.empty() ? 0 : m.lambdas.front();
        const auto b = HodgeBracket::make(cls.g(), cls.h(), m.psi, li);
        if (!c.is_constant()) {
            HodgeClassPoly one(cls.g(), cls.h());
            one.add_term(m, c);
            fail(ErrorCode::derivation_failure, "u-dependent top-degree coefficient: " + one.to_string());
        }
        out.raw += c * LaurentPoly(table.at(b));
    }
    if (!out.raw.is_constant())
        fail(ErrorCode::derivation_failure, "integral depends on u: " + out.raw.to_string());
    out.value = out.raw.constant_term();
    return out;
}

// ---------------------------------------------------------------------------
// Fixed locus

FixedLocusData fixed_locus_data(int g, const Partition& mu) {
    const int h = mu.length();
    if (g < 0 || !is_stable(g, h))
        fail(ErrorCode::unsupported_range,
             "unstable (g,h) = (" + std::to_string(g) + "," + std::to_string(h) + "): need 2g-2+h > 0");
    FixedLocusData d;
    d.g = g;
    d.mu = mu;
    d.b1_fixed.add(0, h);
    d.b2_fixed.add(0, h);
    d.automorphism_factor = 1;
    d.b5m_minus_b2m.add(1, h - 1);
    for (int i = 0; i < h; ++i) {
        const int m = mu[static_cast<std::size_t>(i)];
        d.b4_moving.push_back({i + 1, make_rational(1, m)});
        for (int a = 1; a <= m; ++a)
            d.b5m_minus_b2m.add(make_rational(a, m), -1);
        d.automorphism_factor *= m;
    }
    d.r = 2 * g - 2 + mu.size() + h;
    return d;
}

HodgeClassPoly inverse_euler_normal_closed_form(int g, const Partition& mu) {
    const int h = mu.length();
    Rational c = 1;
    for (int m : mu.parts())
        c *= Rational(pow(BigInt(m), static_cast<unsigned>(m)) * m) / Rational(factorial(static_cast<unsigned>(m)));
    HodgeClassPoly p = HodgeClassPoly::dual_hodge_euler(g, h) * LaurentPoly::monomial(c, h - mu.size() - 1);
    for (int i = 0; i < h; ++i)
        p *= HodgeClassPoly::inverse_linear(g, h, 1, mu[static_cast<std::size_t>(i)], i + 1);
    return p;
}

HodgeClassPoly inverse_euler_normal(const FixedLocusData& data) {
    const int h = data.mu.length();
    const int g = data.g;
    // e(B5m) / e(B2m)
    HodgeClassPoly p = HodgeClassPoly::dual_hodge_euler(g, h, data.hodge_weight) * data.b5m_minus_b2m.euler_class();
    // e(B1m)
    p *= data.b1_moving.euler_class();
    // 1 / e(B4m)
    for (const auto& line : data.b4_moving)
        p *= HodgeClassPoly::inverse_linear(g, h, line.weight, 1, line.point);

    const auto closed = inverse_euler_normal_closed_form(g, data.mu);
    if (!(p == closed))
        fail(ErrorCode::internal_consistency, "compositional inverse Euler class " + p.to_string() +
                                                  " differs from the closed form " + closed.to_string());
    return p;
}

HodgeClassPoly localization_integrand(int g, const Partition& mu) {
    const auto data = fixed_locus_data(g, mu);
    return inverse_euler_normal(data) * LaurentPoly::power(data.r);
}

namespace {
Rational localization_factor(int g, const Partition& mu) {
    const auto data = fixed_locus_data(g, mu);
    return Rational(factorial(static_cast<unsigned>(data.r))) /
           Rational(aut_size(mu) * data.automorphism_factor);
}
} // namespace

Rational elsv_via_localization(int g, const Partition& mu, const HodgeTable& table) {
    return localization_factor(g, mu) * integrate_top(localization_integrand(g, mu), table).value;
}

Rational elsv_via_localization_at(int g, const Partition& mu, const HodgeTable& table, const Rational& a) {
    return localization_factor(g, mu) * integrate_top(localization_integrand(g, mu).substitute_u(a), table).value;
}

} // namespace elsv
