#include "elsv/error.hpp"
#include "elsv/hodge.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace elsv;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ConnectedOracle burnside_oracle() { return make_oracle(Engine::burnside, {}, default_table_store()); }

const HodgeTable& full_table() {
    static const HodgeTable table = [] {
        HodgeTable t;
        for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}})
            elsv_invert_into(t, g, h, {}, default_table_store());
        return t;
    }();
    return table;
}

Rational bracket(int g, std::vector<int> psi, int lambda) {
    const int h = static_cast<int>(psi.size());
    return full_table().at(HodgeBracket::make(g, h, std::move(psi), lambda));
}

// P = H / (r! / #Aut * prod mu^mu / mu!) from brute-force tuple counts.
Rational normalized_by_enumeration(int g, const std::vector<int>& mu) {
    const auto p = Partition::from_unsorted(mu);
    const int r = 2 * g - 2 + p.size() + p.length();
    Rational pref(oracle::fact(r), aut_size(p));
    pref.canonicalize();
    for (int m : mu)
        pref *= Rational(pow(BigInt(m), static_cast<unsigned>(m))) / Rational(oracle::fact(m));
    return oracle::connected_hurwitz(g, mu) / pref;
}

} // namespace

TEST_CASE("bracket keys") {
    const auto b = HodgeBracket::make(1, 2, {0, 1}, 1);
    CHECK(b.psi == std::vector<int>{1, 0});
    CHECK(to_string(b) == "(1,2,[1,0],1)");
    CHECK(parse_bracket("(1,2,[1,0],1)") == b);
    CHECK_THROWS_AS(parse_bracket("(1,2,[1,0]"), Error);
    CHECK_THROWS_AS(HodgeBracket::make(1, 2, {0, 0}, 0), Error); // dimension constraint
    CHECK_THROWS_AS(HodgeBracket::make(0, 2, {0, 0}, 0), Error); // unstable
    CHECK(brackets_for(1, 1).size() == 2);
}

TEST_CASE("seeded table") {
    HodgeTable t;
    CHECK(t.at(HodgeBracket::make(0, 3, {0, 0, 0}, 0)) == 1);
    CHECK(t.has_level(0, 3));
    CHECK_THROWS_AS(t.insert(HodgeBracket::make(0, 3, {0, 0, 0}, 0), 2, Provenance::inverted), Error);
}

TEST_CASE("elsv_invert examples") {
    const auto oracle_fn = burnside_oracle();
    const auto i03 = elsv_invert(0, 3, oracle_fn);
    REQUIRE(i03.brackets.size() == 1);
    CHECK(i03.brackets[0].second == 1);

    // P(1) = <tau_1> - <lambda_1> = 0 and P(2) = 2<tau_1> - <lambda_1>, from enumeration
    const Rational p1 = normalized_by_enumeration(1, {1});
    const Rational p2 = normalized_by_enumeration(1, {2});
    CHECK(p1 == 0);
    CHECK(p2 == q(1, 24));
    const auto sol = oracle::solve({{1, -1}, {2, -1}}, {p1, p2});
    const auto i11 = elsv_invert(1, 1, oracle_fn);
    CHECK(bracket(1, {1}, 0) == sol[0]);
    CHECK(bracket(1, {0}, 1) == sol[1]);
    CHECK(sol[0] == q(1, 24));
    CHECK(sol[1] == q(1, 24));
    for (const auto& [b, v] : i11.brackets)
        CHECK(v == q(1, 24));

    // (0,4): P is linear and symmetric, so c (mu_1 + ... + mu_4); H_{0,(1^4)} = 120 by enumeration
    CHECK(oracle::connected_hurwitz(0, {1, 1, 1, 1}) == 120);
    const Rational c = normalized_by_enumeration(0, {1, 1, 1, 1}) / 4;
    const auto i04 = elsv_invert(0, 4, oracle_fn);
    REQUIRE(i04.brackets.size() == 1);
    CHECK(i04.brackets[0].first == HodgeBracket::make(0, 4, {1, 0, 0, 0}, 0));
    CHECK(i04.brackets[0].second == c);
    CHECK(c == 1);
}

TEST_CASE("genus two, one point, against enumeration") {
    // P(d) = <tau_4> d^4 - <tau_3 lambda_1> d^3 + <tau_2 lambda_2> d^2
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int d = 2; d <= 4; ++d) {
        a.push_back({Rational(d * d * d * d), Rational(-d * d * d), Rational(d * d)});
        b.push_back(normalized_by_enumeration(2, {d}));
    }
    const auto sol = oracle::solve(a, b);
    CHECK(bracket(2, {4}, 0) == sol[0]);
    CHECK(bracket(2, {3}, 1) == sol[1]);
    CHECK(bracket(2, {2}, 2) == sol[2]);
    // the familiar values
    CHECK(sol[0] == q(1, 1152));
    CHECK(sol[1] == q(1, 480));
    CHECK(sol[2] == q(7, 5760));
}

TEST_CASE("elsv_evaluate examples") {
    CHECK(elsv_evaluate(0, Partition{1, 1, 1}, full_table()) == 4);
    CHECK(elsv_evaluate(1, Partition{2}, full_table()) == q(1, 2));
    CHECK(elsv_evaluate(0, Partition{2, 1, 1}, full_table()) == 120);
    CHECK(oracle::connected_hurwitz(0, {1, 1, 1}) == 4);
    CHECK(oracle::connected_hurwitz(1, {2}) == q(1, 2));
    CHECK(oracle::connected_hurwitz(0, {2, 1, 1}) == 120);
}

TEST_CASE("elsv_evaluate errors") {
    HodgeTable seed_only;
    try {
        elsv_evaluate(1, Partition{2}, seed_only);
        FAIL("expected missing bracket");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::missing_bracket);
        CHECK(std::string(e.what()).find("(1,1,[") != std::string::npos);
    }
    for (auto mu : {Partition{1}, Partition{2, 1}}) {
        try {
            elsv_evaluate(0, mu, full_table());
            FAIL("expected unsupported range");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::unsupported_range);
        }
    }
    CHECK_THROWS_AS(elsv_invert(0, 2, burnside_oracle()), Error);
}

TEST_CASE("forward evaluation matches enumeration on small covers") {
    for (const auto& [g, mu] : std::vector<std::pair<int, std::vector<int>>>{
             {0, {3, 1, 1}}, {0, {2, 2, 1}}, {0, {1, 1, 1, 1}}, {1, {3}}, {1, {1, 1}}, {1, {2, 1}}, {2, {2}}, {2, {3}}}) {
        CHECK(elsv_evaluate(g, Partition::from_unsorted(mu), full_table()) == oracle::connected_hurwitz(g, mu));
    }
}

TEST_CASE("genus-one values forced by H_{1,(1)} = 0") {
    CHECK(bracket(1, {1}, 0) == bracket(1, {0}, 1));
    CHECK(elsv_evaluate(1, Partition{3}, full_table()) == connected(1, Partition{3}, Engine::burnside, {}, default_table_store()));
    CHECK(elsv_evaluate(1, Partition{2, 1}, full_table()) ==
          connected(1, Partition{2, 1}, Engine::burnside, {}, default_table_store()));
}

TEST_CASE("round trip on fresh samples") {
    auto& store = default_table_store();
    for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {2, 1}}) {
        const auto inv = elsv_invert(g, h, burnside_oracle());
        const auto fresh = fresh_samples(g, h, inv.fit.samples, 5);
        CHECK(fresh.size() == 5);
        for (const auto& mu : fresh) {
            CHECK(std::find(inv.fit.samples.begin(), inv.fit.samples.end(), mu) == inv.fit.samples.end());
            CHECK(elsv_evaluate(g, mu, full_table()) == connected(g, mu, Engine::burnside, {}, store));
        }
        CHECK(!inv.fit.spot_checked.empty());
    }
}

TEST_CASE("polynomiality witness on a wider degree band") {
    const auto oracle_fn = burnside_oracle();
    for (auto [g, h] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {1, 2}, {2, 1}}) {
        const int dim = 3 * g - 3 + h;
        const int lo = std::max(0, 2 * g - 3 + h - 1);
        const auto fit = fit_normalized_hurwitz(g, h, lo, dim + 1, oracle_fn);
        for (std::size_t k = 0; k < fit.basis.size(); ++k) {
            const int deg = fit.basis[k].size();
            if (deg < 2 * g - 3 + h || deg > dim)
                CHECK(fit.coefficients[k] == 0);
        }
    }
}

TEST_CASE("fit is invariant under permuting sample coordinates") {
    const auto oracle_fn = burnside_oracle();
    for (auto [g, h] : std::vector<std::pair<int, int>>{{0, 4}, {1, 2}, {0, 5}}) {
        const auto fit = fit_normalized_hurwitz(g, h, 2 * g - 3 + h, 3 * g - 3 + h, oracle_fn);
        std::vector<std::pair<std::vector<int>, Rational>> permuted;
        for (const auto& mu : fit.samples) {
            auto parts = mu.parts();
            std::rotate(parts.begin(), parts.begin() + 1, parts.end());
            std::swap(parts.front(), parts.back());
            permuted.emplace_back(parts, normalized_hurwitz(g, mu, oracle_fn(g, mu)));
        }
        CHECK(fit_symmetric(fit.basis, permuted) == fit.coefficients);
    }
}

TEST_CASE("string equation") {
    HodgeTable seed_only;
    const auto empty = string_equation_check(seed_only);
    CHECK(empty.checks.empty());

    const auto report = string_equation_check(full_table());
    CHECK(report.all_passed());
    bool saw_04 = false, saw_12 = false;
    for (const auto& c : report.checks) {
        if (c.lhs == HodgeBracket::make(0, 4, {1, 0, 0, 0}, 0)) {
            saw_04 = true;
            CHECK(c.lhs_value == 1);
            CHECK(c.rhs_value == 1);
        }
        if (c.lhs == HodgeBracket::make(1, 2, {2, 0}, 0)) {
            saw_12 = true;
            CHECK(c.rhs_value == bracket(1, {1}, 0));
        }
    }
    CHECK(saw_04);
    CHECK(saw_12);
}

TEST_CASE("export and import") {
    HodgeTable seed_only;
    const auto doc = hodge_export(seed_only);
    REQUIRE(doc.at("entries").size() == 1);
    CHECK(doc["entries"][0]["value"] == "1");
    CHECK(doc["entries"][0]["provenance"] == "seeded");

    HodgeTable t11;
    elsv_invert_into(t11, 1, 1, {}, default_table_store());
    const auto d11 = hodge_export(t11);
    std::vector<std::string> values;
    for (const auto& e : d11["entries"])
        if (e["key"].get<std::string>().rfind("(1,1", 0) == 0)
            values.push_back(e["value"]);
    CHECK(values == std::vector<std::string>{"1/24", "1/24"});

    CHECK(hodge_import(hodge_export(full_table())) == full_table());
    CHECK(hodge_export(full_table()).dump() == hodge_export(hodge_import(hodge_export(full_table()))).dump());
    CHECK_THROWS_AS(hodge_import(nlohmann::json{{"format", "other"}}), Error);
}

TEST_CASE("monomial symmetric functions") {
    CHECK(monomial_symmetric(Partition{1}, {1, 2, 3}) == 6);
    CHECK(monomial_symmetric(Partition{1, 1}, {1, 2, 3}) == 11);
    CHECK(monomial_symmetric(Partition{2}, {1, 2, 3}) == 14);
    CHECK(monomial_symmetric(Partition{}, {1, 2}) == 1);
    CHECK(monomial_symmetric(Partition{1, 1, 1}, {1, 2}) == 0);
}
