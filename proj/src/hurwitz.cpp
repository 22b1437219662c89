#include "elsv/hurwitz.hpp"

#include "elsv/error.hpp"
#include "elsv/kernels/transposition_step.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>

namespace elsv {

std::string_view to_string(Engine e) {
    switch (e) {
    case Engine::dfs:
        return "dfs";
    case Engine::dp:
        return "dp";
    case Engine::burnside:
        return "burnside";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "dfs")
        return Engine::dfs;
    if (name == "dp")
        return Engine::dp;
    if (name == "burnside")
        return Engine::burnside;
    fail(ErrorCode::parse_error, "unknown engine '" + std::string(name) + "' (expected dfs, dp or burnside)");
}

int branch_points_connected(int g, const Partition& mu) {
    if (mu.empty())
        fail(ErrorCode::invalid_query, "connected Hurwitz numbers need a nonempty partition");
    if (g < 0)
        fail(ErrorCode::invalid_query, "genus must be nonnegative");
    const int r = 2 * g - 2 + mu.size() + mu.length();
    if (r < 0)
        fail(ErrorCode::invalid_query, "r = 2g-2+|mu|+l(mu) = " + std::to_string(r) + " < 0");
    return r;
}

int branch_points_disconnected(int chi, const Partition& mu) {
    const int r = -chi + mu.size() + mu.length();
    if (r < 0)
        fail(ErrorCode::invalid_query, "r = -chi+|mu|+l(mu) = " + std::to_string(r) + " < 0");
    return r;
}

bool parity_allows(int r, const Partition& mu) { return (r - (mu.size() - mu.length())) % 2 == 0; }

// ---------------------------------------------------------------------------
// DFS

namespace {

class FactorizationSearch {
public:
    FactorizationSearch(const Permutation& target, bool transitive, Composition composition, std::uint64_t budget)
        : d_(target.degree()), transitive_(transitive), composition_(composition), budget_(budget),
          pairs_(transposition_pairs(d_)), rest_(target.images()), rest_inv_(target.inverse().images()) {}

    DfsCount run(int r) {
        const int dist = d_ - Permutation(rest_).cycle_count();
        if (dist > r || (r - dist) % 2 != 0)
            return {};
        labels_.assign(static_cast<std::size_t>(r) + 1, std::vector<int>(static_cast<std::size_t>(d_)));
        std::iota(labels_[0].begin(), labels_[0].end(), 0);
        visit(0, r, dist, d_);
        return {count_, nodes_};
    }

private:
    bool same_cycle(int a, int b) const {
        for (int x = rest_[static_cast<std::size_t>(a)]; x != a; x = rest_[static_cast<std::size_t>(x)])
            if (x == b)
                return true;
        return false;
    }

    void apply(int a, int b) {
        auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
        if (composition_ == Composition::right_to_left) {
            // rest <- tau * rest
            std::swap(rest_[static_cast<std::size_t>(rest_inv_[ua])], rest_[static_cast<std::size_t>(rest_inv_[ub])]);
            std::swap(rest_inv_[ua], rest_inv_[ub]);
        } else {
            // rest <- rest * tau
            std::swap(rest_[ua], rest_[ub]);
            rest_inv_[static_cast<std::size_t>(rest_[ua])] = a;
            rest_inv_[static_cast<std::size_t>(rest_[ub])] = b;
        }
    }

    void visit(int depth, int remaining, int dist, int components) {
        if (++nodes_ > budget_)
            fail(ErrorCode::resource_limit,
                 "DFS node budget of " + std::to_string(budget_) + " visited nodes exceeded");
        if (remaining == 0) {
            if (dist == 0 && (!transitive_ || components == 1))
                ++count_;
            return;
        }
        const auto& lab = labels_[static_cast<std::size_t>(depth)];
        auto& next_lab = labels_[static_cast<std::size_t>(depth) + 1];
        for (auto [a, b] : pairs_) {
            const int next_dist = same_cycle(a, b) ? dist - 1 : dist + 1;
            if (next_dist > remaining - 1)
                continue;
            int next_components = components;
            if (transitive_) {
                const int la = lab[static_cast<std::size_t>(a)], lb = lab[static_cast<std::size_t>(b)];
                next_lab = lab;
                if (la != lb) {
                    --next_components;
                    for (auto& l : next_lab)
                        if (l == lb)
                            l = la;
                }
                if (next_components - 1 > remaining - 1)
                    continue;
            }
            apply(a, b);
            visit(depth + 1, remaining - 1, next_dist, next_components);
            apply(a, b);
        }
    }

    int d_;
    bool transitive_;
    Composition composition_;
    std::uint64_t budget_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> rest_;      // product still to be produced by the remaining factors
    std::vector<int> rest_inv_;
    std::vector<std::vector<int>> labels_;
    BigInt count_ = 0;
    std::uint64_t nodes_ = 0;
};

Permutation representative(const Partition& mu, const DfsOptions& options) {
    if (!options.sigma_infinity)
        return Permutation::canonical(mu);
    if (options.sigma_infinity->cycle_type() != mu)
        fail(ErrorCode::invalid_argument, "sigma_infinity does not have cycle type (" + to_string(mu) + ")");
    return *options.sigma_infinity;
}

} // namespace

DfsCount count_factorizations_dfs(int r, const Permutation& target, bool transitive, Composition composition,
                                  std::uint64_t node_budget) {
    if (r < 0)
        fail(ErrorCode::invalid_query, "negative number of factors");
    return FactorizationSearch(target, transitive, composition, node_budget).run(r);
}

Rational connected_dfs(int g, const Partition& mu, const Budgets& budgets, const DfsOptions& options) {
    const int r = branch_points_connected(g, mu);
    const auto target = representative(mu, options);
    auto result = count_factorizations_dfs(r, target, true, options.composition, budgets.dfs_max_nodes);
    return make_rational(result.tuples, z(mu));
}

Rational disconnected_dfs(int chi, const Partition& mu, const Budgets& budgets, const DfsOptions& options) {
    const int r = branch_points_disconnected(chi, mu);
    const auto target = representative(mu, options);
    auto result = count_factorizations_dfs(r, target, false, options.composition, budgets.dfs_max_nodes);
    return make_rational(result.tuples, z(mu));
}

// ---------------------------------------------------------------------------
// DP

namespace {

const kernels::NeighborTable& neighbor_table(int d, Composition composition) {
    static std::mutex mutex;
    static std::map<std::pair<int, Composition>, kernels::NeighborTable> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(d, composition);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, kernels::make_neighbor_table(d, composition)).first;
    return it->second;
}

} // namespace

std::vector<BigInt> factorization_counts_dp(const Partition& mu, int max_r, const Budgets& budgets,
                                            Composition composition) {
    const int d = mu.size();
    if (d > budgets.dp_max_d)
        fail(ErrorCode::resource_limit, "DP engine limited to d <= " + std::to_string(budgets.dp_max_d) +
                                            " (vector of d! entries); got d = " + std::to_string(d));
    if (max_r < 0)
        return {};
    const auto& table = neighbor_table(d, composition);
    const auto target = rank(Permutation::canonical(mu));
    const auto identity = rank(Permutation::identity(d));

    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(max_r) + 1);

    std::vector<std::uint64_t> cur(table.order, 0), next(table.order, 0);
    cur[identity] = 1;
    out.emplace_back(static_cast<unsigned long>(cur[target]));

    // Every entry is bounded by the total C(d,2)^k, so 64-bit counts are
    // exact while that total fits.
    const BigInt limit = BigInt(std::numeric_limits<std::uint64_t>::max());
    BigInt total = 1;
    int k = 0;
    for (; k < max_r; ++k) {
        BigInt next_total = total * static_cast<unsigned long>(table.generators);
        if (next_total > limit)
            break;
        kernels::transposition_step(table, cur, next);
        std::swap(cur, next);
        total = next_total;
        out.emplace_back(static_cast<unsigned long>(cur[target]));
    }
    if (k < max_r) {
        std::vector<BigInt> big(table.order), big_next(table.order);
        for (std::size_t i = 0; i < table.order; ++i)
            big[i] = static_cast<unsigned long>(cur[i]);
        for (; k < max_r; ++k) {
            kernels::transposition_step_big(table, big, big_next);
            std::swap(big, big_next);
            out.push_back(big[target]);
        }
    }
    return out;
}

Rational disconnected_dp(int chi, const Partition& mu, const Budgets& budgets, Composition composition) {
    const int r = branch_points_disconnected(chi, mu);
    if (chi % 2 != 0)
        return 0;
    auto counts = factorization_counts_dp(mu, r, budgets, composition);
    return make_rational(counts.back(), z(mu));
}

// ---------------------------------------------------------------------------
// Burnside

CharacterTableStore& default_table_store() {
    static CharacterTableStore store;
    return store;
}

std::vector<Rational> disconnected_burnside_series(const Partition& mu, int max_r, CharacterTableStore& store,
                                                   const Budgets& budgets) {
    const int d = mu.size();
    std::vector<Rational> out;
    if (max_r < 0)
        return out;
    if (d == 0) {
        out.assign(static_cast<std::size_t>(max_r) + 1, Rational(0));
        out[0] = 1;
        return out;
    }
    if (d > budgets.burnside_max_d)
        fail(ErrorCode::resource_limit, "Burnside engine limited to d <= " + std::to_string(budgets.burnside_max_d) +
                                            "; got d = " + std::to_string(d));
    const auto& table = store.get(d);
    const auto col = table.index_of(mu);
    const BigInt denom = factorial(static_cast<unsigned>(d)) * z(mu);

    std::vector<BigInt> weight, base, power;
    for (std::size_t nu = 0; nu < table.size(); ++nu) {
        const auto chi = table.at(nu, col);
        if (chi == 0)
            continue;
        weight.emplace_back(BigInt(static_cast<long>(table.dimension(nu))) * BigInt(static_cast<long>(chi)));
        base.emplace_back(kappa(table.partitions()[nu]) / 2);
        power.emplace_back(1);
    }
    for (int r = 0; r <= max_r; ++r) {
        BigInt sum = 0;
        for (std::size_t i = 0; i < weight.size(); ++i) {
            sum += weight[i] * power[i];
            power[i] *= base[i];
        }
        out.push_back(make_rational(sum, denom));
    }
    return out;
}

Rational disconnected_burnside(int chi, const Partition& mu, CharacterTableStore& store, const Budgets& budgets) {
    const int r = branch_points_disconnected(chi, mu);
    if (chi % 2 != 0)
        return 0;
    return disconnected_burnside_series(mu, r, store, budgets).back();
}

// ---------------------------------------------------------------------------
// Series

bool HurwitzSeries::Truncation::admits(const Partition& mu, int r) const {
    if (r < 0 || r > max_r || mu.size() > max_d)
        return false;
    return !within || mu.is_submultiset_of(*within);
}

HurwitzSeries HurwitzSeries::one(Truncation truncation) {
    HurwitzSeries s(std::move(truncation));
    s.set(Partition(), 0, 1);
    return s;
}

void HurwitzSeries::set(const Partition& mu, int exponent, const Rational& value) {
    const int r = exponent + mu.size();
    if (!trunc_.admits(mu, r))
        return;
    Key key{mu, exponent};
    if (value == 0)
        terms_.erase(key);
    else
        terms_[key] = value;
}

Rational HurwitzSeries::coefficient(const Partition& mu, int exponent) const {
    auto it = terms_.find({mu, exponent});
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

// Divided-power form: key (mu, r), value H / r!.
using Weighted = std::map<std::pair<Partition, int>, Rational>;

Weighted to_weighted(const HurwitzSeries& s) {
    Weighted w;
    for (const auto& [key, value] : s.terms()) {
        const int r = key.second + key.first.size();
        w[{key.first, r}] = value / Rational(factorial(static_cast<unsigned>(r)));
    }
    return w;
}

HurwitzSeries from_weighted(const Weighted& w, const HurwitzSeries::Truncation& t) {
    HurwitzSeries s(t);
    for (const auto& [key, value] : w) {
        const int r = key.second;
        s.set(key.first, r - key.first.size(), value * Rational(factorial(static_cast<unsigned>(r))));
    }
    return s;
}

Weighted multiply(const Weighted& a, const Weighted& b, const HurwitzSeries::Truncation& t) {
    Weighted out;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            const int r = ka.second + kb.second;
            if (r > t.max_r || ka.first.size() + kb.first.size() > t.max_d)
                continue;
            auto mu = ka.first.merged(kb.first);
            if (!t.admits(mu, r))
                continue;
            auto& slot = out[{std::move(mu), r}];
            slot += va * vb;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

void axpy(Weighted& acc, const Rational& scale, const Weighted& x) {
    for (const auto& [k, v] : x) {
        auto& slot = acc[k];
        slot += scale * v;
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

} // namespace

HurwitzSeries connected_from_disconnected(const HurwitzSeries& disconnected) {
    if (disconnected.coefficient(Partition(), 0) != 1)
        fail(ErrorCode::invalid_series, "formal logarithm needs constant term 1 (coefficient of p_empty lambda^0)");
    const auto& t = disconnected.truncation();
    Weighted g = to_weighted(disconnected);
    g.erase({Partition(), 0});

    // log(1 + G) = sum_k (-1)^{k+1} G^k / k; every term of G raises |mu| + r,
    // so the powers vanish beyond the truncation.
    Weighted result, power = g;
    for (int k = 1; !power.empty(); ++k) {
        axpy(result, Rational(k % 2 ? 1 : -1, k), power);
        power = multiply(power, g, t);
    }
    return from_weighted(result, t);
}

HurwitzSeries disconnected_from_connected(const HurwitzSeries& connected) {
    if (connected.coefficient(Partition(), 0) != 0)
        fail(ErrorCode::invalid_series, "formal exponential needs a series without constant term");
    const auto& t = connected.truncation();
    const Weighted g = to_weighted(connected);
    Weighted result{{{Partition(), 0}, Rational(1)}};
    Weighted term = g;
    for (int k = 1; !term.empty(); ++k) {
        axpy(result, Rational(1), term);
        term = multiply(term, g, t);
        for (auto& [key, v] : term)
            v /= k + 1;
    }
    return from_weighted(result, t);
}

Rational connected_via_transform(int g, const Partition& mu, Engine engine, const Budgets& budgets,
                                 CharacterTableStore& store) {
    const int r = branch_points_connected(g, mu);
    if (engine == Engine::dfs)
        fail(ErrorCode::invalid_argument, "the transform route needs a disconnected engine (dp or burnside)");
    HurwitzSeries::Truncation t{r, mu.size(), mu};
    auto series = HurwitzSeries::one(t);
    for (const auto& nu : submultisets(mu)) {
        if (nu.empty())
            continue;
        std::vector<Rational> values;
        if (engine == Engine::dp) {
            const BigInt zn = z(nu);
            for (auto& count : factorization_counts_dp(nu, r, budgets))
                values.push_back(make_rational(count, zn));
        } else {
            values = disconnected_burnside_series(nu, r, store, budgets);
        }
        for (int k = 0; k <= r; ++k)
            series.set(nu, k - nu.size(), values[static_cast<std::size_t>(k)]);
    }
    return connected_from_disconnected(series).coefficient(mu, r - mu.size());
}

Rational connected(int g, const Partition& mu, Engine engine, const Budgets& budgets, CharacterTableStore& store) {
    if (engine == Engine::dfs)
        return connected_dfs(g, mu, budgets);
    return connected_via_transform(g, mu, engine, budgets, store);
}

Rational disconnected(int chi, const Partition& mu, Engine engine, const Budgets& budgets,
                      CharacterTableStore& store) {
    switch (engine) {
    case Engine::dfs:
        branch_points_disconnected(chi, mu);
        return chi % 2 ? Rational(0) : disconnected_dfs(chi, mu, budgets);
    case Engine::dp:
        return disconnected_dp(chi, mu, budgets);
    case Engine::burnside:
        return disconnected_burnside(chi, mu, store, budgets);
    }
    return 0;
}

SeriesKind natural_kind(Engine engine) {
    return engine == Engine::dfs ? SeriesKind::connected : SeriesKind::disconnected;
}

LambdaSeries phi_series(const Partition& mu, Engine engine, int max_r, SeriesKind kind, const Budgets& budgets,
                        CharacterTableStore& store) {
    LambdaSeries out;
    const int d = mu.size(), h = mu.length();
    for (int r = 0; r <= max_r; ++r) {
        if (!parity_allows(r, mu))
            continue;
        Rational value;
        if (kind == SeriesKind::connected) {
            const int twice_g = r - d - h + 2;
            if (twice_g < 0 || twice_g % 2 != 0 || mu.empty())
                continue;
            value = connected(twice_g / 2, mu, engine, budgets, store);
        } else {
            value = disconnected(d + h - r, mu, engine, budgets, store);
        }
        if (value != 0)
            out[r - d] = value;
    }
    return out;
}

ConnectedOracle make_oracle(Engine engine, const Budgets& budgets, CharacterTableStore& store) {
    return [engine, budgets, &store](int g, const Partition& mu) { return connected(g, mu, engine, budgets, store); };
}

} // namespace elsv
