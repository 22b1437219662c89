#include "elsv/hodge.hpp"

#include "elsv/error.hpp"
#include "elsv/linsolve.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace elsv {

void require_stable(int g, int h) {
    if (!is_stable(g, h))
        fail(ErrorCode::unsupported_range, "unstable (g,h) = (" + std::to_string(g) + "," + std::to_string(h) +
                                               "): 2g-2+h = " + std::to_string(2 * g - 2 + h) +
                                               " must be positive");
}

HodgeBracket HodgeBracket::make(int g, int h, std::vector<int> psi, int lambda) {
    require_stable(g, h);
    if (static_cast<int>(psi.size()) != h)
        fail(ErrorCode::invalid_argument, "bracket needs exactly h psi exponents");
    if (lambda < 0 || lambda > g)
        fail(ErrorCode::invalid_argument, "lambda index must lie in [0, g]");
    int total = lambda;
    for (int j : psi) {
        if (j < 0)
            fail(ErrorCode::invalid_argument, "psi exponents must be nonnegative");
        total += j;
    }
    if (total != 3 * g - 3 + h)
        fail(ErrorCode::invalid_argument, "bracket violates the dimension constraint: degree " +
                                              std::to_string(total) + " != 3g-3+h = " +
                                              std::to_string(3 * g - 3 + h));
    std::sort(psi.begin(), psi.end(), std::greater<>());
    return HodgeBracket{g, h, std::move(psi), lambda};
}

std::string to_string(const HodgeBracket& b) {
    std::string s = "(" + std::to_string(b.g) + "," + std::to_string(b.h) + ",[";
    for (std::size_t k = 0; k < b.psi.size(); ++k) {
        if (k)
            s += ",";
        s += std::to_string(b.psi[k]);
    }
    return s + "]," + std::to_string(b.lambda) + ")";
}

std::string pretty(const HodgeBracket& b) {
    std::string s = "<";
    for (std::size_t k = 0; k < b.psi.size(); ++k) {
        if (k)
            s += " ";
        s += "tau_" + std::to_string(b.psi[k]);
    }
    if (b.lambda > 0)
        s += " lambda_" + std::to_string(b.lambda);
    return s + ">_g=" + std::to_string(b.g);
}

HodgeBracket parse_bracket(std::string_view text) {
    auto bad = [&]() -> HodgeBracket {
        fail(ErrorCode::parse_error, "malformed bracket key '" + std::string(text) + "'");
    };
    std::vector<int> numbers;
    std::vector<int> psi;
    bool in_list = false, saw_list = false;
    std::size_t i = 0;
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        return bad();
    std::string_view body = text.substr(1, text.size() - 2);
    while (i < body.size()) {
        char c = body[i];
        if (c == '[') {
            if (in_list || saw_list || numbers.size() != 2)
                return bad();
            in_list = true;
            ++i;
        } else if (c == ']') {
            if (!in_list)
                return bad();
            in_list = false;
            saw_list = true;
            ++i;
        } else if (c == ',' || c == ' ') {
            ++i;
        } else {
            int v = 0;
            auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), v);
            if (ec != std::errc())
                return bad();
            i = static_cast<std::size_t>(ptr - body.data());
            (in_list ? psi : numbers).push_back(v);
        }
    }
    if (in_list || !saw_list || numbers.size() != 3)
        return bad();
    try {
        auto b = HodgeBracket::make(numbers[0], numbers[1], psi, numbers[2]);
        if (b.psi != psi)
            return bad(); // keys are stored sorted
        return b;
    } catch (const Error&) {
        return bad();
    }
}

namespace {

// Calls f on every weak composition of `total` into `parts` parts.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> c(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == parts - 1) {
            c[static_cast<std::size_t>(k)] = left;
            f(c);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[static_cast<std::size_t>(k)] = v;
            rec(k + 1, left - v);
        }
    };
    if (parts == 0) {
        if (total == 0)
            f(c);
        return;
    }
    rec(0, total);
}

std::vector<int> padded(const Partition& p, int h) {
    auto v = p.parts();
    v.resize(static_cast<std::size_t>(h), 0);
    return v;
}

} // namespace

std::vector<HodgeBracket> brackets_for(int g, int h) {
    require_stable(g, h);
    std::vector<HodgeBracket> out;
    const int dim = 3 * g - 3 + h;
    for (int i = 0; i <= g; ++i)
        for (int k = 0; k <= h; ++k)
            for (const auto& j : partitions_of(dim - i, k))
                out.push_back(HodgeBracket::make(g, h, padded(j, h), i));
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(Provenance p) { return p == Provenance::seeded ? "seeded" : "inverted-from-hurwitz"; }

HodgeTable::HodgeTable() { entries_.emplace(HodgeBracket::make(0, 3, {0, 0, 0}, 0), Entry{1, Provenance::seeded}); }

void HodgeTable::insert(const HodgeBracket& b, const Rational& value, Provenance provenance) {
    auto [it, inserted] = entries_.emplace(b, Entry{value, provenance});
    if (!inserted && it->second.value != value)
        fail(ErrorCode::internal_consistency, "conflicting values for " + to_string(b) + ": " +
                                                  to_string(it->second.value) + " vs " + to_string(value));
}

void HodgeTable::merge(const HodgeTable& other) {
    for (const auto& [b, e] : other.entries_)
        insert(b, e.value, e.provenance);
}

std::optional<Rational> HodgeTable::find(const HodgeBracket& b) const {
    auto it = entries_.find(b);
    if (it == entries_.end())
        return std::nullopt;
    return it->second.value;
}

const Rational& HodgeTable::at(const HodgeBracket& b) const {
    auto it = entries_.find(b);
    if (it == entries_.end())
        fail(ErrorCode::missing_bracket, "Hodge table has no entry for " + to_string(b) + " " + pretty(b));
    return it->second.value;
}

bool HodgeTable::has_level(int g, int h) const {
    if (!is_stable(g, h))
        return false;
    for (const auto& b : brackets_for(g, h))
        if (!entries_.count(b))
            return false;
    return true;
}

nlohmann::json hodge_export(const HodgeTable& table) {
    nlohmann::json doc;
    doc["format"] = "elsv-hodge-table";
    doc["version"] = kHodgeTableFormatVersion;
    auto entries = nlohmann::json::array();
    for (const auto& [b, e] : table.entries())
        entries.push_back({{"key", to_string(b)}, {"value", to_string(e.value)}, {"provenance", to_string(e.provenance)}});
    doc["entries"] = std::move(entries);
    return doc;
}

HodgeTable hodge_import(const nlohmann::json& doc) {
    try {
        if (doc.at("format") != "elsv-hodge-table" || doc.at("version") != kHodgeTableFormatVersion)
            fail(ErrorCode::parse_error, "Hodge table document has unknown format or version");
        HodgeTable table;
        for (const auto& e : doc.at("entries")) {
            const auto prov = e.at("provenance").get<std::string>();
            Provenance p;
            if (prov == "seeded")
                p = Provenance::seeded;
            else if (prov == "inverted-from-hurwitz")
                p = Provenance::inverted;
            else
                fail(ErrorCode::parse_error, "unknown provenance '" + prov + "'");
            table.insert(parse_bracket(e.at("key").get<std::string>()),
                         parse_rational(e.at("value").get<std::string>()), p);
        }
        return table;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, std::string("malformed Hodge table document: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

Rational elsv_prefactor(int g, const Partition& mu) {
    const int r = branch_points_connected(g, mu);
    Rational out(factorial(static_cast<unsigned>(r)), aut_size(mu));
    out.canonicalize();
    for (int m : mu.parts())
        out *= make_rational(pow(BigInt(m), static_cast<unsigned>(m)), factorial(static_cast<unsigned>(m)));
    return out;
}

Rational normalized_hurwitz(int g, const Partition& mu, const Rational& hurwitz) {
    return hurwitz / elsv_prefactor(g, mu);
}

Rational elsv_evaluate(int g, const Partition& mu, const HodgeTable& table) {
    const int h = mu.length();
    require_stable(g, h);
    const int dim = 3 * g - 3 + h;
    Rational integral = 0;
    for (int i = 0; i <= g; ++i) {
        Rational level = 0;
        for_each_composition(dim - i, h, [&](const std::vector<int>& j) {
            const auto& value = table.at(HodgeBracket::make(g, h, j, i));
            if (value == 0)
                return;
            BigInt weight = 1;
            for (int k = 0; k < h; ++k)
                weight *= pow(BigInt(mu[static_cast<std::size_t>(k)]), static_cast<unsigned>(j[static_cast<std::size_t>(k)]));
            level += value * Rational(weight);
        });
        integral += (i % 2 ? -level : level);
    }
    return elsv_prefactor(g, mu) * integral;
}

Rational monomial_symmetric(const Partition& exponents, const std::vector<int>& x) {
    const int h = static_cast<int>(x.size());
    if (exponents.length() > h)
        return 0;
    auto e = padded(exponents, h);
    std::sort(e.begin(), e.end());
    BigInt sum = 0;
    do {
        BigInt term = 1;
        for (std::size_t k = 0; k < e.size(); ++k)
            term *= pow(BigInt(x[k]), static_cast<unsigned>(e[k]));
        sum += term;
    } while (std::next_permutation(e.begin(), e.end()));
    return Rational(sum);
}

std::vector<Partition> symmetric_basis(int h, int lo, int hi) {
    std::vector<Partition> out;
    for (int deg = std::max(lo, 0); deg <= hi; ++deg)
        for (int k = 0; k <= h; ++k)
            for (auto& p : partitions_of(deg, k))
                out.push_back(std::move(p));
    return out;
}

std::vector<Rational> fit_symmetric(const std::vector<Partition>& basis,
                                    const std::vector<std::pair<std::vector<int>, Rational>>& samples) {
    RationalMatrix a;
    std::vector<Rational> b;
    for (const auto& [x, value] : samples) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (const auto& j : basis)
            row.push_back(monomial_symmetric(j, x));
        a.push_back(std::move(row));
        b.push_back(value);
    }
    return solve_exact(a, b);
}

namespace {

bool has_repeated_part(const Partition& p) {
    return std::adjacent_find(p.parts().begin(), p.parts().end()) != p.parts().end();
}

// Preferred sampling order: distinct parts first, then cheaper samples.
bool sample_order(const Partition& a, const Partition& b) {
    auto key = [](const Partition& p) { return std::make_tuple(has_repeated_part(p), p.size()); };
    if (key(a) != key(b))
        return key(a) < key(b);
    return a > b;
}

std::vector<Partition> grid(int h, int bound, int max_degree) {
    std::vector<Partition> out;
    for (int d = h; d <= std::min(bound * h, max_degree); ++d)
        for (auto& p : partitions_of(d, h))
            if (p[0] <= bound)
                out.push_back(std::move(p));
    std::sort(out.begin(), out.end(), sample_order);
    return out;
}

std::string describe_samples(const std::vector<Partition>& samples) {
    std::string s;
    for (const auto& p : samples)
        s += (s.empty() ? "(" : " (") + to_string(p) + ")";
    return s;
}

} // namespace

SymmetricFit fit_normalized_hurwitz(int g, int h, int lo, int hi, const ConnectedOracle& oracle,
                                    const InterpolationOptions& options) {
    require_stable(g, h);
    SymmetricFit fit;
    fit.g = g;
    fit.h = h;
    fit.basis = symmetric_basis(h, lo, hi);

    IndependentRows rows(fit.basis.size());
    std::set<Partition> tried;
    int bound = std::max(3 * g - 1 + h, 1);
    const int max_bound = std::max(options.max_sample_degree - h + 1, 1);
    while (!rows.full()) {
        for (const auto& mu : grid(h, bound, options.max_sample_degree)) {
            if (!tried.insert(mu).second)
                continue;
            std::vector<Rational> row;
            for (const auto& j : fit.basis)
                row.push_back(monomial_symmetric(j, mu.parts()));
            if (rows.try_add(row))
                fit.samples.push_back(mu);
            if (rows.full())
                break;
        }
        if (rows.full() || bound >= max_bound)
            break;
        ++bound;
    }
    fit.grid_bound = bound;
    if (!rows.full())
        fail(ErrorCode::singular_system,
             "interpolation for (g,h) = (" + std::to_string(g) + "," + std::to_string(h) + ") reached rank " +
                 std::to_string(rows.rank()) + " of " + std::to_string(fit.basis.size()) +
                 " on the grid {1.." + std::to_string(bound) + "}^" + std::to_string(h) + " with |mu| <= " +
                 std::to_string(options.max_sample_degree) + "; samples:" + describe_samples(fit.samples));

    std::vector<std::pair<std::vector<int>, Rational>> samples;
    for (const auto& mu : fit.samples)
        samples.emplace_back(mu.parts(), normalized_hurwitz(g, mu, oracle(g, mu)));

    // Independent enumeration on the cheapest samples.
    auto by_cost = fit.samples;
    std::sort(by_cost.begin(), by_cost.end(), [](const Partition& a, const Partition& b) {
        return std::make_pair(a.size(), a.length()) < std::make_pair(b.size(), b.length());
    });
    // Samples whose enumeration exceeds the spot-check budget are skipped.
    for (const auto& mu : by_cost) {
        if (static_cast<int>(fit.spot_checked.size()) >= options.dfs_spot_checks)
            break;
        Rational dfs_value;
        try {
            dfs_value = connected_dfs(g, mu, options.spot_check_budgets);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::resource_limit)
                continue;
            throw;
        }
        const auto engine_value = oracle(g, mu);
        if (engine_value != dfs_value)
            fail(ErrorCode::internal_consistency, "DFS spot check failed at g=" + std::to_string(g) + " mu=(" +
                                                      to_string(mu) + "): engine " + to_string(engine_value) +
                                                      " vs enumeration " + to_string(dfs_value));
        fit.spot_checked.push_back(mu);
    }

    fit.coefficients = fit_symmetric(fit.basis, samples);
    return fit;
}

Inversion elsv_invert(int g, int h, const ConnectedOracle& oracle, const InterpolationOptions& options) {
    require_stable(g, h);
    const int dim = 3 * g - 3 + h;
    Inversion out;
    out.fit = fit_normalized_hurwitz(g, h, dim - g, dim, oracle, options);
    for (std::size_t k = 0; k < out.fit.basis.size(); ++k) {
        const auto& j = out.fit.basis[k];
        const int i = dim - j.size();
        const Rational value = i % 2 ? Rational(-out.fit.coefficients[k]) : out.fit.coefficients[k];
        out.brackets.emplace_back(HodgeBracket::make(g, h, padded(j, h), i), value);
    }
    std::sort(out.brackets.begin(), out.brackets.end());
    return out;
}

Inversion elsv_invert_into(HodgeTable& table, int g, int h, const Budgets& budgets, CharacterTableStore& store,
                           const InterpolationOptions& options) {
    auto opts = options;
    opts.max_sample_degree = std::min(opts.max_sample_degree, budgets.burnside_max_d);
    auto inv = elsv_invert(g, h, make_oracle(Engine::burnside, budgets, store), opts);
    for (const auto& [b, v] : inv.brackets)
        table.insert(b, v, Provenance::inverted);
    return inv;
}

std::vector<Partition> fresh_samples(int g, int h, const std::vector<Partition>& used, std::size_t count,
                                     int max_degree) {
    require_stable(g, h);
    std::vector<Partition> out;
    for (int d = h; d <= max_degree && out.size() < count; ++d) {
        auto level = partitions_of(d, h);
        std::sort(level.begin(), level.end(), sample_order);
        for (auto& p : level) {
            if (std::find(used.begin(), used.end(), p) != used.end())
                continue;
            out.push_back(std::move(p));
            if (out.size() == count)
                break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool StringReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const StringCheck& c) { return c.passed; });
}

StringReport string_equation_check(const HodgeTable& table) {
    StringReport report;
    for (const auto& [b, entry] : table.entries()) {
        if (b.lambda != 0 || b.psi.empty() || b.psi.back() != 0)
            continue;
        if (!is_stable(b.g, b.h - 1)) {
            ++report.skipped;
            continue;
        }
        std::vector<int> rest(b.psi.begin(), b.psi.end() - 1);
        StringCheck check{b, {}, entry.value, 0, false};
        bool complete = true;
        for (std::size_t k = 0; k < rest.size(); ++k) {
            if (rest[k] == 0)
                continue;
            auto lowered = rest;
            --lowered[k];
            auto rb = HodgeBracket::make(b.g, b.h - 1, lowered, 0);
            {
                auto v = table.find(rb);
                if (!v) {
                    complete = false;
                    break;
                }
                check.rhs.push_back(rb);
                check.rhs_value += *v;
            }
        }
        if (!complete) {
            ++report.skipped;
            continue;
        }
        check.passed = check.lhs_value == check.rhs_value;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace elsv
