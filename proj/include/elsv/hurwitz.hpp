#pragma once

#include "elsv/partitions.hpp"
#include "elsv/permutation.hpp"
#include "elsv/rational.hpp"
#include "elsv/symgroup.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace elsv {

enum class Engine { dfs, dp, burnside };

std::string_view to_string(Engine e);
/// Accepts "dfs", "dp", "burnside"; throws Error(invalid_argument).
Engine parse_engine(std::string_view name);

struct Budgets {
    std::uint64_t dfs_max_nodes = 100'000'000;
    int dp_max_d = 7;
    int burnside_max_d = kTableMaxDegree;
    friend bool operator==(const Budgets&, const Budgets&) = default;
};

/// r = 2g - 2 + |mu| + l(mu); throws Error(invalid_query) when negative or mu is empty.
int branch_points_connected(int g, const Partition& mu);
/// r = -chi + |mu| + l(mu); throws Error(invalid_query) when negative.
int branch_points_disconnected(int chi, const Partition& mu);

/// A product of r transpositions has the sign of sigma_infinity only when
/// r and |mu| - l(mu) share parity.
bool parity_allows(int r, const Partition& mu);

// ---------------------------------------------------------------------------
// Enumeration engine

struct DfsOptions {
    Composition composition = Composition::right_to_left;
    /// Defaults to Permutation::canonical(mu).
    std::optional<Permutation> sigma_infinity;
};

struct DfsCount {
    BigInt tuples;
    std::uint64_t nodes = 0;
};

/// Counts r-tuples of transpositions whose product is `target`, optionally
/// requiring the generated subgroup to act transitively. Throws
/// Error(resource_limit) once more than `node_budget` search nodes are visited.
DfsCount count_factorizations_dfs(int r, const Permutation& target, bool transitive, Composition composition,
                                  std::uint64_t node_budget);

Rational connected_dfs(int g, const Partition& mu, const Budgets& budgets = {}, const DfsOptions& options = {});
/// Same enumeration without the transitivity condition.
Rational disconnected_dfs(int chi, const Partition& mu, const Budgets& budgets = {},
                          const DfsOptions& options = {});

// ---------------------------------------------------------------------------
// Group-algebra dynamic program

/// Entry k is the number of k-tuples of transpositions with product equal to
/// the canonical representative of mu, for k = 0..max_r.
std::vector<BigInt> factorization_counts_dp(const Partition& mu, int max_r, const Budgets& budgets = {},
                                            Composition composition = Composition::right_to_left);

/// Odd chi gives 0 (sign obstruction).
Rational disconnected_dp(int chi, const Partition& mu, const Budgets& budgets = {},
                         Composition composition = Composition::right_to_left);

// ---------------------------------------------------------------------------
// Character sum

/// Process-wide in-memory table store.
CharacterTableStore& default_table_store();

/// Entry r is (1/z_mu) sum_nu (kappa_nu/2)^r (dim R_nu / d!) chi_nu(C_mu), r = 0..max_r.
std::vector<Rational> disconnected_burnside_series(const Partition& mu, int max_r, CharacterTableStore& store,
                                                   const Budgets& budgets = {});

Rational disconnected_burnside(int chi, const Partition& mu, CharacterTableStore& store,
                               const Budgets& budgets = {});
inline Rational disconnected_burnside(int chi, const Partition& mu) {
    return disconnected_burnside(chi, mu, default_table_store());
}

// ---------------------------------------------------------------------------
// Generating series

/// Truncated series in lambda and the power sums p_i. The coefficient stored
/// under (mu, e) multiplies lambda^e p_mu, with e = r - |mu| as in Phi_mu.
/// Truncation bounds r = e + |mu|, |mu|, and optionally restricts mu to
/// sub-multisets of a fixed partition.
class HurwitzSeries {
public:
    struct Truncation {
        int max_r = 0;
        int max_d = 0;
        std::optional<Partition> within;

        bool admits(const Partition& mu, int r) const;
        friend bool operator==(const Truncation&, const Truncation&) = default;
    };
    using Key = std::pair<Partition, int>;

    explicit HurwitzSeries(Truncation truncation) : trunc_(std::move(truncation)) {}
    static HurwitzSeries one(Truncation truncation);

    const Truncation& truncation() const noexcept { return trunc_; }
    const std::map<Key, Rational>& terms() const noexcept { return terms_; }

    /// Terms outside the truncation are dropped; zero values erase the key.
    void set(const Partition& mu, int exponent, const Rational& value);
    Rational coefficient(const Partition& mu, int exponent) const;
    bool empty() const noexcept { return terms_.empty(); }

    friend bool operator==(const HurwitzSeries&, const HurwitzSeries&) = default;

private:
    Truncation trunc_;
    std::map<Key, Rational> terms_;
};

/// Formal logarithm: recovers sum_{mu != empty} Phi_mu p_mu from
/// sum_mu Phi*_mu p_mu. Products of covers interleave their branch points,
/// so the exp/log is taken in the divided powers lambda^r / r!.
/// Throws Error(invalid_series) unless the (empty, 0) coefficient is 1.
HurwitzSeries connected_from_disconnected(const HurwitzSeries& disconnected);

/// Formal exponential, inverse of the above. Throws Error(invalid_series)
/// if the input has a constant term.
HurwitzSeries disconnected_from_connected(const HurwitzSeries& connected);

/// Connected H_{g,mu} by extracting the disconnected engine's values for
/// all sub-multisets of mu and taking the formal logarithm.
Rational connected_via_transform(int g, const Partition& mu, Engine engine, const Budgets& budgets,
                                 CharacterTableStore& store);

/// Connected number by the given engine (dfs directly, others via transform).
Rational connected(int g, const Partition& mu, Engine engine, const Budgets& budgets, CharacterTableStore& store);
Rational disconnected(int chi, const Partition& mu, Engine engine, const Budgets& budgets,
                      CharacterTableStore& store);

enum class SeriesKind { connected, disconnected };

/// One-variable series: exponent -> coefficient.
using LambdaSeries = std::map<int, Rational>;

/// Phi_mu (connected) or Phi*_mu (disconnected) over all r <= max_r; the
/// exponent of each term is r - |mu| = -chi + l(mu). Zero terms are omitted.
LambdaSeries phi_series(const Partition& mu, Engine engine, int max_r, SeriesKind kind, const Budgets& budgets,
                        CharacterTableStore& store);

/// dfs yields the connected series, dp and burnside the disconnected one.
SeriesKind natural_kind(Engine engine);

using ConnectedOracle = std::function<Rational(int g, const Partition& mu)>;
ConnectedOracle make_oracle(Engine engine, const Budgets& budgets, CharacterTableStore& store);

} // namespace elsv
