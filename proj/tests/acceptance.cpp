// Acceptance criteria 1-10: one PASS/FAIL line each.

#include "elsv/eqcoh.hpp"
#include "elsv/error.hpp"
#include "elsv/hodge.hpp"
#include "elsv/hurwitz.hpp"
#include "elsv/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace elsv;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.passed)
        ++failures;
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << secs;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " | " << o.detail << " ["
              << t.str() << "s]" << std::endl;
}

Outcome from_report(const Report& r, const std::string& what) {
    std::string first_failure;
    for (const auto& c : r.checks)
        if (!c.passed && first_failure.empty())
            first_failure = c.suite + " " + c.name + ": " + c.detail;
    return {r.all_passed() && !r.checks.empty(),
            std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) + " " + what +
                (first_failure.empty() ? "" : "; first failure " + first_failure)};
}

} // namespace

int main() {
    auto& store = default_table_store();
    const VerifyContext ctx{Budgets{}, &store};
    ReferenceTable ref;
    bool have_ref = false;
    auto reference = [&]() -> const ReferenceTable& {
        if (!have_ref) {
            ref = build_reference_table(ctx.budgets, store);
            have_ref = true;
        }
        return ref;
    };

    criterion(1, "engine agreement, |mu| <= 5, r <= 6", [&] {
        return from_report(verify_engines(ctx, 5, 6), "(g, mu) agree across dfs, dp+log, burnside+log");
    });

    criterion(2, "disconnected dp = burnside, |mu| <= 6, r <= 10", [&] {
        auto o = from_report(verify_burnside(ctx, 6, 10), "partitions agree for every r");
        const auto a = oracle::hurwitz(1, {2}, false);
        const auto b = oracle::hurwitz(6, {3}, false);
        const bool hand = a == make_rational(1, 2) && b == 81 && disconnected_dp(2, Partition{2}) == a &&
                          disconnected_burnside(2, Partition{2}, store) == a && disconnected_dp(-2, Partition{3}) == b &&
                          disconnected_burnside(-2, Partition{3}, store) == b;
        o.passed = o.passed && hand;
        o.detail += "; H*(2,(2)) = " + to_string(a) + ", H*(-2,(3)) = " + to_string(b) + " by tuple enumeration";
        return o;
    });

    criterion(3, "seed reproduction <tau_0^3> = 1", [&] {
        const auto inv = elsv_invert(0, 3, make_oracle(Engine::burnside, {}, store));
        const bool ok = inv.brackets.size() == 1 && inv.brackets[0].second == 1;
        return Outcome{ok, "elsv_invert(0,3) = " + (inv.brackets.empty() ? "-" : to_string(inv.brackets[0].second))};
    });

    criterion(4, "genus-one forcing <tau_1> = <lambda_1> = 1/24", [&] {
        const auto h11 = connected_dfs(1, Partition{1});
        const auto h12 = connected_dfs(1, Partition{2});
        const auto& t = reference().table;
        const auto tau = t.at(HodgeBracket::make(1, 1, {1}, 0));
        const auto lam = t.at(HodgeBracket::make(1, 1, {0}, 1));
        const auto e3 = elsv_evaluate(1, Partition{3}, t);
        const auto e21 = elsv_evaluate(1, Partition{2, 1}, t);
        const auto b3 = connected(1, Partition{3}, Engine::burnside, {}, store);
        const auto b21 = connected(1, Partition{2, 1}, Engine::burnside, {}, store);
        const bool ok = h11 == 0 && h12 == make_rational(1, 2) && tau == make_rational(1, 24) &&
                        lam == make_rational(1, 24) && e3 == b3 && e21 == b21;
        return Outcome{ok, "H_{1,(1)} = " + to_string(h11) + ", H_{1,(2)} = " + to_string(h12) + ", brackets " +
                               to_string(tau) + ", " + to_string(lam) + "; H_{1,(3)} = " + to_string(e3) + " vs " +
                               to_string(b3) + ", H_{1,(2,1)} = " + to_string(e21) + " vs " + to_string(b21)};
    });

    criterion(5, "ELSV round trip on 5 fresh samples per inverted level", [&] {
        const auto r = verify_elsv(reference(), ctx);
        Report grid;
        for (const auto& c : r.checks)
            if (c.name.rfind("g=", 0) == 0)
                grid.checks.push_back(c);
        auto o = from_report(grid, "samples match the Burnside engine");
        o.passed = o.passed && grid.checks.size() == 5 * inverted_levels().size();
        return o;
    });

    criterion(6, "Burnside series convention (substitute: coefficient identity plus d = 1 probe)", [&] {
        // Engine side: Phi*_{(1)} = lambda^{-1}. Character side as printed: sum_r (kappa/2)^r lambda^r ... = 1.
        const auto engine = phi_series(Partition{1}, Engine::dp, 6, SeriesKind::disconnected, {}, store);
        const auto coeffs = disconnected_burnside_series(Partition{1}, 6, store);
        LambdaSeries printed;
        for (int r = 0; r <= 6; ++r)
            if (coeffs[static_cast<std::size_t>(r)] != 0)
                printed[r] = coeffs[static_cast<std::size_t>(r)];
        LambdaSeries shifted;
        for (const auto& [e, c] : printed)
            shifted[e - 1] = c; // multiply by lambda^{-d}, d = 1
        const bool probe_fails = engine != printed;
        const bool shift_fixes = engine == shifted;
        const auto coeff = verify_burnside(ctx, 6, 10);
        const bool ok = probe_fails && shift_fixes && coeff.all_passed();
        return Outcome{ok, std::string("series statement as printed ") + (probe_fails ? "fails" : "holds") +
                               " at d = 1, off by lambda^{-d} " + (shift_fixes ? "exactly" : "NOT") +
                               "; coefficient identity verified instead"};
    });

    criterion(7, "GRR identities, (k,a) in [-5,5]x[-3,3], d <= 4", [&] {
        auto o = from_report(verify_grr(), "groups pass");
        // the displayed weight lists
        const auto [p0, p1] = pushforward_char_p1(1, 0);
        const auto [c0, c1] = pushforward_char_cover(1, 0, 2);
        const bool lists = p0.to_string() == "{-1, 0}" && p1.empty() && c0.to_string() == "{-1, -1/2, 0}" && c1.empty();
        o.passed = o.passed && lists;
        o.detail += "; H0(O(1)) = " + p0.to_string() + ", H0(f*O(1)) = " + c0.to_string();
        return o;
    });

    criterion(8, "Atiyah-Bott: point class integrates to 1 on P^r, r <= 8", [&] {
        std::string values;
        bool ok = true;
        for (int r = 0; r <= 8; ++r) {
            const auto ring = EquivariantPolyRing::projective_space(r);
            const auto v = ab_integrate(ring, ring.point_class(r));
            ok = ok && v == LaurentPoly(1);
            values += (r ? "," : "") + v.to_string();
        }
        return Outcome{ok, "values " + values};
    });

    criterion(9, "localization re-derivation equals elsv_evaluate, u-independent", [&] {
        const auto& t = reference().table;
        int n = 0, bad = 0, u_terms = 0;
        std::string first;
        for (const auto& [g, mu] : roundtrip_grid(reference())) {
            ++n;
            const auto cls = localization_integrand(g, mu);
            const auto top_part = cls.degree_part(cls.max_degree());
            for (const auto& [m, c] : top_part.terms()) {
                ++u_terms;
                if (!c.is_constant()) {
                    ++bad;
                    if (first.empty())
                        first = "u-dependent coefficient at g=" + std::to_string(g) + " mu=(" + to_string(mu) + ")";
                }
            }
            const auto e = elsv_evaluate(g, mu, t);
            const auto top = integrate_top(cls, t);
            const bool same = elsv_via_localization(g, mu, t) == e &&
                              elsv_via_localization_at(g, mu, t, make_rational(-5, 3)) == e && top.raw.is_constant();
            if (!same) {
                ++bad;
                if (first.empty())
                    first = "mismatch at g=" + std::to_string(g) + " mu=(" + to_string(mu) + ")";
            }
        }
        return Outcome{bad == 0 && n == 30, std::to_string(n) + " covers, " + std::to_string(u_terms) +
                                                " top-degree coefficients all constant in u" +
                                                (first.empty() ? "" : "; " + first)};
    });

    criterion(10, "string equation on inverted lambda_0 brackets through (1,2) and (0,5)", [&] {
        const auto s = string_equation_check(reference().table);
        bool has_05 = false, has_12 = false;
        for (const auto& c : s.checks) {
            has_05 = has_05 || (c.lhs.g == 0 && c.lhs.h == 5);
            has_12 = has_12 || (c.lhs.g == 1 && c.lhs.h == 2);
        }
        const bool ok = s.all_passed() && has_05 && has_12;
        return Outcome{ok, std::to_string(s.checks.size()) + " identities checked, " + std::to_string(s.skipped) +
                               " skipped (target level unstable)"};
    });

    std::cout << (failures == 0 ? "all acceptance criteria pass" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
