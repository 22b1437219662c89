#pragma once

// Rank-one torus equivariant cohomology: weights of C^*-representations,
// fixed-point (GRR) character sums, H^*_T(P^r) with Atiyah-Bott integration,
// and the Hodge class algebra used to re-derive the ELSV integrand from the
// fixed locus of the relative stable map space.
//
// Weights are rational multiples of the generator u. The Euler class of C_w
// is w u.

#include "elsv/hodge.hpp"
#include "elsv/laurent.hpp"
#include "elsv/partitions.hpp"
#include "elsv/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elsv {

/// Virtual representation of C^*: weight -> multiplicity (possibly negative).
class WeightMultiset {
public:
    WeightMultiset() = default;
    WeightMultiset(std::initializer_list<Rational> weights);

    void add(const Rational& weight, long multiplicity = 1);

    const std::map<Rational, long>& terms() const noexcept { return terms_; }
    long multiplicity(const Rational& w) const;
    bool empty() const noexcept { return terms_.empty(); }
    /// Virtual rank: sum of multiplicities.
    long rank() const;
    /// lcm of the weight denominators (1 when empty).
    BigInt common_denominator() const;

    WeightMultiset& operator+=(const WeightMultiset& o);
    WeightMultiset& operator-=(const WeightMultiset& o);
    friend WeightMultiset operator+(WeightMultiset a, const WeightMultiset& b) { return a += b; }
    friend WeightMultiset operator-(WeightMultiset a, const WeightMultiset& b) { return a -= b; }
    friend bool operator==(const WeightMultiset&, const WeightMultiset&) = default;

    /// Euler class prod (w u)^m as a Laurent monomial in u. Throws
    /// Error(invalid_argument) for a zero weight with nonzero multiplicity.
    LaurentPoly euler_class() const;

    /// "{w, w, ...}" for genuine representations, "{w:m, ...}" otherwise.
    std::string to_string() const;

private:
    std::map<Rational, long> terms_;
};

struct FixedPoint {
    WeightMultiset tangent;
    WeightMultiset fiber;
};

/// Weights at the two poles q0 = [0,1], q1 = [1,0] of P^1 under t.[x,y] = [tx,y],
/// for the lift of O(k) with weight a at q0.
struct PoleWeights {
    Rational tangent_q0, tangent_q1;
    Rational fiber_q0, fiber_q1;
};
PoleWeights fixed_point_weights_p1(long a, long k);

/// Fixed-point data of O(k) on P^1, and of its pullback along z -> z^d.
std::vector<FixedPoint> fixed_points_p1(long k, long a);
std::vector<FixedPoint> fixed_points_cover(long k, long a, long d);

/// (H^0, H^1) of O(k) as representations.
std::pair<WeightMultiset, WeightMultiset> pushforward_char_p1(long k, long a);
/// (H^0, H^1) of f^* O(k) for the degree-d cover f(z) = z^d. Requires d >= 1.
std::pair<WeightMultiset, WeightMultiset> pushforward_char_cover(long k, long a, long d);

/// Checks sum_j sum_l e^{y_jl} / prod_k (1 - e^{-x_jk}) = ch(claimed) exactly,
/// as an identity of Laurent polynomials in q = e^{u/D} after clearing
/// denominators. Throws Error(invalid_fixed_point) for a zero tangent weight.
bool grr_localization_check(const std::vector<FixedPoint>& fixed_points, const WeightMultiset& claimed);

/// Diagnostic: Laurent expansion in u of (fixed-point sum - ch(claimed)) up
/// to u^order. Zero when the identity holds.
LaurentPoly grr_series_difference(const std::vector<FixedPoint>& fixed_points, const WeightMultiset& claimed,
                                  int order = 12);

// ---------------------------------------------------------------------------
// H^*_T(P^r) = Q[u, H] / prod_i (H + a_i u)

class EquivariantPolyRing {
public:
    /// Element sum_k coeffs[k] H^k with k <= r.
    struct Element {
        std::vector<LaurentPoly> coeffs;
        friend bool operator==(const Element&, const Element&) = default;
    };

    /// Lift weights a_0..a_r, pairwise distinct.
    explicit EquivariantPolyRing(std::vector<long> lift_weights);
    /// The action t.[a_0, ..., a_r] = [a_0, t^-1 a_1, ..., t^-r a_r]: a_i = -i.
    static EquivariantPolyRing projective_space(int r);

    int dimension() const noexcept { return static_cast<int>(weights_.size()) - 1; }
    const std::vector<long>& lift_weights() const noexcept { return weights_; }

    Element constant(const LaurentPoly& c) const;
    Element hyperplane() const;
    /// Reduces an arbitrary polynomial in H (coefficients in u) to canonical form.
    Element reduce(std::vector<LaurentPoly> coeffs) const;

    Element add(const Element& a, const Element& b) const;
    Element multiply(const Element& a, const Element& b) const;

    /// Value at the fixed point p_i, where H restricts to -a_i u.
    LaurentPoly restrict_to(const Element& e, int i) const;
    /// prod_{j != i} (H + a_j u): the equivariant class of p_i.
    Element point_class(int i) const;

private:
    std::vector<long> weights_;
    std::vector<LaurentPoly> relation_; // H^{r+1} = sum_k relation_[k] H^k
};

/// sum_i e|_{p_i} / prod_{j != i} (a_j - a_i) u. All denominators are powers
/// of u, so the result is a Laurent polynomial.
LaurentPoly ab_integrate(const EquivariantPolyRing& ring, const EquivariantPolyRing::Element& e);

// ---------------------------------------------------------------------------
// Hodge class algebra

struct HodgeMonomial {
    std::vector<int> psi;     // exponent of psi_1..psi_h
    std::vector<int> lambdas; // indices of lambda factors, sorted, each >= 1

    int degree() const;
    friend auto operator<=>(const HodgeMonomial&, const HodgeMonomial&) = default;
    friend bool operator==(const HodgeMonomial&, const HodgeMonomial&) = default;
};

/// Polynomial in psi_1..psi_h, lambda_1..lambda_g with Laurent coefficients in
/// u, truncated above cohomological degree 3g-3+h.
class HodgeClassPoly {
public:
    HodgeClassPoly(int g, int h);

    static HodgeClassPoly constant(int g, int h, const LaurentPoly& c);
    /// psi_i, 1 <= i <= h.
    static HodgeClassPoly psi(int g, int h, int i);
    /// lambda_i; lambda_0 = 1 and lambda_i = 0 for i > g.
    static HodgeClassPoly lambda(int g, int h, int i);
    /// Lambda_g^vee(w u) = sum_i (-1)^i lambda_i (w u)^{g-i}: Euler class of E^vee (x) C_w.
    static HodgeClassPoly dual_hodge_euler(int g, int h, const Rational& weight = 1);
    /// 1 / (alpha u - beta psi_i) = (alpha u)^{-1} sum_j (beta psi_i / (alpha u))^j,
    /// truncated by degree. Requires alpha != 0.
    static HodgeClassPoly inverse_linear(int g, int h, const Rational& alpha, const Rational& beta, int i);

    int g() const noexcept { return g_; }
    int h() const noexcept { return h_; }
    int max_degree() const noexcept { return 3 * g_ - 3 + h_; }
    const std::map<HodgeMonomial, LaurentPoly>& terms() const noexcept { return terms_; }

    void add_term(const HodgeMonomial& m, const LaurentPoly& c);

    HodgeClassPoly& operator+=(const HodgeClassPoly& o);
    HodgeClassPoly& operator-=(const HodgeClassPoly& o);
    HodgeClassPoly& operator*=(const HodgeClassPoly& o);
    HodgeClassPoly& operator*=(const LaurentPoly& c);
    friend HodgeClassPoly operator+(HodgeClassPoly a, const HodgeClassPoly& b) { return a += b; }
    friend HodgeClassPoly operator-(HodgeClassPoly a, const HodgeClassPoly& b) { return a -= b; }
    friend HodgeClassPoly operator*(HodgeClassPoly a, const HodgeClassPoly& b) { return a *= b; }
    friend HodgeClassPoly operator*(HodgeClassPoly a, const LaurentPoly& c) { return a *= c; }
    friend bool operator==(const HodgeClassPoly&, const HodgeClassPoly&) = default;

    /// Terms of cohomological degree exactly k.
    HodgeClassPoly degree_part(int k) const;
    /// Replaces u by a nonzero rational; coefficients become constants.
    HodgeClassPoly substitute_u(const Rational& a) const;

    /// Canonical text: terms "c u^k psi1^a psi2 lam1" joined by " + ".
    std::string to_string() const;
    /// Inverse of to_string. Throws Error(parse_error).
    static HodgeClassPoly parse(std::string_view text, int g, int h);

private:
    int g_, h_;
    std::map<HodgeMonomial, LaurentPoly> terms_;
};

/// Result of pairing the top-degree part of a class with a Hodge table.
struct TopIntegral {
    Rational value;
    /// sum over top-degree monomials of coefficient * bracket, before requiring
    /// u-independence; constant exactly when the derivation is consistent.
    LaurentPoly raw;
};

/// Integrates over M_{g,h} bar: keeps degree 3g-3+h and pairs monomials with
/// the table. Each selected coefficient must be constant in u, otherwise
/// Error(derivation_failure) names the offending term. Monomials with more
/// than one lambda factor are rejected (linear integrals only).
TopIntegral integrate_top(const HodgeClassPoly& cls, const HodgeTable& table);

// ---------------------------------------------------------------------------
// Fixed locus F_r of the branch morphism

struct FixedLocusData {
    int g = 0;
    Partition mu;

    WeightMultiset b1_fixed;  // Aut(D_i, y_i, x_i): C_0 each
    WeightMultiset b1_moving; // 0
    WeightMultiset b2_fixed;  // C_0 from each H^0(D_i)
    WeightMultiset b5_fixed;  // 0

    /// B4 moving part: L_i^vee (x) C_{1/mu_i}; Euler class (u/mu_i - psi_i).
    struct NormalLine {
        int point;      // 1-based marked point
        Rational weight;
    };
    std::vector<NormalLine> b4_moving;

    /// B5^m - B2^m = (E^vee (x) C_hodge_weight) + representation part.
    Rational hodge_weight = 1;
    WeightMultiset b5m_minus_b2m;

    /// prod mu_i = |Aut(f)|; the virtual class is iota_*[M_{g,h}] / this.
    BigInt automorphism_factor;

    /// 2g - 2 + |mu| + l(mu)
    int r = 0;
};

/// Throws Error(unsupported_range) for unstable (g, l(mu)).
FixedLocusData fixed_locus_data(int g, const Partition& mu);

/// e(B5m) e(B1m) / (e(B2m) e(B4m)), assembled piece by piece and checked
/// against the closed form prod mu_i^mu_i/mu_i! * prod mu_i * Lambda_g^vee(u)
/// u^{h-d-1} / prod (u - mu_i psi_i). Throws Error(internal_consistency) if
/// the two differ.
HodgeClassPoly inverse_euler_normal(const FixedLocusData& data);
HodgeClassPoly inverse_euler_normal_closed_form(int g, const Partition& mu);

/// u^r / e(N^vir) for the fixed locus.
HodgeClassPoly localization_integrand(int g, const Partition& mu);

/// r!/(#Aut(mu) prod mu_i) * integral of u^r / e(N^vir): equals H_{g,mu}.
Rational elsv_via_localization(int g, const Partition& mu, const HodgeTable& table);
/// Same, with u set to the nonzero rational `a` before degree selection.
Rational elsv_via_localization_at(int g, const Partition& mu, const HodgeTable& table, const Rational& a);

} // namespace elsv
