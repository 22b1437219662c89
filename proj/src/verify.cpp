#include "elsv/verify.hpp"

#include "elsv/eqcoh.hpp"
#include "elsv/error.hpp"

#include <algorithm>

namespace elsv {

Suite parse_suite(std::string_view name) {
    for (Suite s : {Suite::engines, Suite::elsv, Suite::burnside, Suite::grr, Suite::string, Suite::localization,
                    Suite::all})
        if (to_string(s) == name)
            return s;
    fail(ErrorCode::parse_error,
         "unknown suite '" + std::string(name) + "' (engines, elsv, burnside, grr, string, localization, all)");
}

std::string_view to_string(Suite s) {
    switch (s) {
    case Suite::engines:
        return "engines";
    case Suite::elsv:
        return "elsv";
    case Suite::burnside:
        return "burnside";
    case Suite::grr:
        return "grr";
    case Suite::string:
        return "string";
    case Suite::localization:
        return "localization";
    case Suite::all:
        break;
    }
    return "all";
}

bool Report::all_passed() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void Report::add(std::string suite, std::string name, bool passed, std::string detail) {
    checks.push_back(CheckResult{std::move(suite), std::move(name), passed, std::move(detail)});
}

void Report::append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

const std::vector<std::pair<int, int>>& inverted_levels() {
    static const std::vector<std::pair<int, int>> levels{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}};
    return levels;
}

const Inversion& ReferenceTable::inversion(int g, int h) const {
    for (const auto& [level, inv] : inversions)
        if (level == std::make_pair(g, h))
            return inv;
    fail(ErrorCode::missing_bracket, "level (" + std::to_string(g) + "," + std::to_string(h) + ") was not inverted");
}

ReferenceTable build_reference_table(const Budgets& budgets, CharacterTableStore& store) {
    ReferenceTable ref;
    for (auto [g, h] : inverted_levels())
        ref.inversions.emplace_back(std::make_pair(g, h), elsv_invert_into(ref.table, g, h, budgets, store));
    return ref;
}

std::vector<std::pair<int, Partition>> roundtrip_grid(const ReferenceTable& ref, std::size_t per_level) {
    std::vector<std::pair<int, Partition>> grid;
    for (const auto& [level, inv] : ref.inversions)
        for (auto& mu : fresh_samples(level.first, level.second, inv.fit.samples, per_level))
            grid.emplace_back(level.first, std::move(mu));
    return grid;
}

namespace {

std::string describe(int g, const Partition& mu) { return "g=" + std::to_string(g) + " mu=(" + to_string(mu) + ")"; }

// Runs f, turning library errors into a failed check.
template <class F>
void guarded(Report& report, const std::string& suite, const std::string& name, F&& f) {
    try {
        auto [ok, detail] = f();
        report.add(suite, name, ok, std::move(detail));
    } catch (const Error& e) {
        report.add(suite, name, false, std::string("error: ") + e.what());
    }
}

} // namespace

Report verify_engines(const VerifyContext& ctx, int max_d, int max_r) {
    Report report;
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& mu : partitions_of(d)) {
            for (int r = 0; r <= max_r; ++r) {
                if (!parity_allows(r, mu) || r < d + mu.length() - 2)
                    continue;
                const int g = (r - d - mu.length() + 2) / 2;
                guarded(report, "engines", describe(g, mu), [&] {
                    const auto a = connected(g, mu, Engine::dfs, ctx.budgets, *ctx.store);
                    const auto b = connected(g, mu, Engine::dp, ctx.budgets, *ctx.store);
                    const auto c = connected(g, mu, Engine::burnside, ctx.budgets, *ctx.store);
                    return std::make_pair(a == b && b == c,
                                          "dfs " + to_string(a) + ", dp " + to_string(b) + ", burnside " + to_string(c));
                });
            }
        }
    }
    return report;
}

Report verify_burnside(const VerifyContext& ctx, int max_d, int max_r) {
    Report report;
    for (int d = 1; d <= max_d; ++d) {
        for (const auto& mu : partitions_of(d)) {
            guarded(report, "burnside", "mu=(" + to_string(mu) + ") r<=" + std::to_string(max_r), [&] {
                int compared = 0;
                std::string bad;
                for (int r = 0; r <= max_r; ++r) {
                    const int chi = d + mu.length() - r;
                    const auto a = disconnected_dp(chi, mu, ctx.budgets);
                    const auto b = disconnected_burnside(chi, mu, *ctx.store, ctx.budgets);
                    ++compared;
                    if (a != b && bad.empty())
                        bad = "chi=" + std::to_string(chi) + ": dp " + to_string(a) + " vs burnside " + to_string(b);
                }
                return std::make_pair(bad.empty(), bad.empty() ? std::to_string(compared) + " values agree" : bad);
            });
        }
    }
    const std::vector<std::tuple<int, Partition, Rational>> known{{2, Partition{2}, Rational(1, 2)},
                                                                  {-2, Partition{3}, Rational(81)}};
    for (const auto& [chi, mu, expected] : known) {
        guarded(report, "burnside", "H*(chi=" + std::to_string(chi) + ", mu=(" + to_string(mu) + "))", [&] {
            const auto v = disconnected_burnside(chi, mu, *ctx.store, ctx.budgets);
            return std::make_pair(v == expected, to_string(v) + " (expected " + to_string(expected) + ")");
        });
    }
    return report;
}

Report verify_grr() {
    Report report;
    for (long d = 1; d <= 4; ++d) {
        guarded(report, "grr", "d=" + std::to_string(d) + " k in [-5,5] a in [-3,3]", [&] {
            int passed = 0;
            std::string bad;
            for (long k = -5; k <= 5; ++k) {
                for (long a = -3; a <= 3; ++a) {
                    const auto fps = fixed_points_cover(k, a, d);
                    const auto [h0, h1] = pushforward_char_cover(k, a, d);
                    const auto claimed = h0 - h1;
                    const bool ok = grr_localization_check(fps, claimed) &&
                                    grr_series_difference(fps, claimed).is_zero();
                    if (ok)
                        ++passed;
                    else if (bad.empty())
                        bad = "fails at k=" + std::to_string(k) + " a=" + std::to_string(a);
                }
            }
            return std::make_pair(bad.empty(), bad.empty() ? std::to_string(passed) + " identities hold" : bad);
        });
    }
    guarded(report, "grr", "perturbed character is rejected", [] {
        auto [h0, h1] = pushforward_char_p1(1, 0);
        auto claimed = h0 - h1;
        claimed.add(Rational(1));
        const bool rejected = !grr_localization_check(fixed_points_p1(1, 0), claimed);
        return std::make_pair(rejected, std::string(rejected ? "rejected" : "accepted a wrong character"));
    });
    return report;
}

Report verify_string(const ReferenceTable& ref) {
    Report report;
    const auto s = string_equation_check(ref.table);
    for (const auto& c : s.checks)
        report.add("string", to_string(c.lhs), c.passed, to_string(c.lhs_value) + " vs " + to_string(c.rhs_value));
    report.add("string", "coverage", !s.checks.empty(),
               std::to_string(s.checks.size()) + " checked, " + std::to_string(s.skipped) + " skipped");
    return report;
}

Report verify_elsv(const ReferenceTable& ref, const VerifyContext& ctx) {
    Report report;
    guarded(report, "elsv", "seed <tau_0^3> = 1", [&] {
        const auto v = ref.table.at(HodgeBracket::make(0, 3, {0, 0, 0}, 0));
        return std::make_pair(v == 1, to_string(v));
    });
    guarded(report, "elsv", "<tau_1> = <lambda_1> = 1/24", [&] {
        const auto t = ref.table.at(HodgeBracket::make(1, 1, {1}, 0));
        const auto l = ref.table.at(HodgeBracket::make(1, 1, {0}, 1));
        return std::make_pair(t == Rational(1, 24) && l == Rational(1, 24), to_string(t) + ", " + to_string(l));
    });
    for (const auto& [g, mu] : roundtrip_grid(ref)) {
        guarded(report, "elsv", describe(g, mu), [&, g = g, mu = mu] {
            const auto e = elsv_evaluate(g, mu, ref.table);
            const auto hn = connected(g, mu, Engine::burnside, ctx.budgets, *ctx.store);
            return std::make_pair(e == hn, "elsv " + to_string(e) + ", hurwitz " + to_string(hn));
        });
    }
    return report;
}

Report verify_localization(const ReferenceTable& ref) {
    Report report;
    guarded(report, "localization", "point class integrates to 1 on P^r, r <= 8", [] {
        for (int r = 0; r <= 8; ++r) {
            const auto ring = EquivariantPolyRing::projective_space(r);
            const auto v = ab_integrate(ring, ring.point_class(r));
            if (!(v == LaurentPoly(1)))
                return std::make_pair(false, "r=" + std::to_string(r) + ": " + v.to_string());
        }
        return std::make_pair(true, std::string("9 spaces"));
    });
    guarded(report, "localization", "B-piece product equals closed form, g<=2 h<=3 parts<=4", [] {
        int n = 0;
        for (int g = 0; g <= 2; ++g)
            for (int h = 1; h <= 3; ++h) {
                if (!is_stable(g, h))
                    continue;
                for (int d = h; d <= 4 * h; ++d)
                    for (const auto& mu : partitions_of(d, h)) {
                        if (mu[0] > 4)
                            continue;
                        inverse_euler_normal(fixed_locus_data(g, mu)); // throws on mismatch
                        ++n;
                    }
            }
        return std::make_pair(true, std::to_string(n) + " fixed loci");
    });
    const std::vector<Rational> points{Rational(1), Rational(-2), Rational(7, 3)};
    for (const auto& [g, mu] : roundtrip_grid(ref)) {
        guarded(report, "localization", describe(g, mu), [&, g = g, mu = mu] {
            const auto e = elsv_evaluate(g, mu, ref.table);
            const auto l = elsv_via_localization(g, mu, ref.table);
            bool ok = e == l;
            for (const auto& a : points)
                ok = ok && elsv_via_localization_at(g, mu, ref.table, a) == e;
            return std::make_pair(ok, "localization " + to_string(l) + ", elsv " + to_string(e));
        });
    }
    return report;
}

Report run_suite(Suite suite, const VerifyContext& ctx) {
    Report report;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::engines)
        report.append(verify_engines(ctx));
    if (all || suite == Suite::burnside)
        report.append(verify_burnside(ctx));
    if (all || suite == Suite::grr)
        report.append(verify_grr());
    if (all || suite == Suite::elsv || suite == Suite::string || suite == Suite::localization) {
        ReferenceTable ref;
        try {
            ref = build_reference_table(ctx.budgets, *ctx.store);
        } catch (const Error& e) {
            report.add("inversion", "reference table", false, std::string("error: ") + e.what());
            return report;
        }
        if (all || suite == Suite::elsv)
            report.append(verify_elsv(ref, ctx));
        if (all || suite == Suite::string)
            report.append(verify_string(ref));
        if (all || suite == Suite::localization)
            report.append(verify_localization(ref));
    }
    return report;
}

} // namespace elsv
