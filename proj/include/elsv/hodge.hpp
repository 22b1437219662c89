#pragma once

#include "elsv/hurwitz.hpp"
#include "elsv/partitions.hpp"
#include "elsv/rational.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace elsv {

/// True when M_{g,h} bar exists: 2g - 2 + h > 0.
inline bool is_stable(int g, int h) { return g >= 0 && h >= 0 && 2 * g - 2 + h > 0; }

/// Throws Error(unsupported_range) for unstable (g, h).
void require_stable(int g, int h);

/// Integral of psi_1^{j_1} ... psi_h^{j_h} lambda_i over M_{g,h} bar. The psi
/// exponents are kept sorted in descending order, so the key is symmetric in
/// the marked points.
struct HodgeBracket {
    int g = 0;
    int h = 0;
    std::vector<int> psi;
    int lambda = 0;

    /// Sorts psi; validates stability, i in [0, g], length h, and the
    /// dimension constraint sum(psi) + i = 3g - 3 + h.
    static HodgeBracket make(int g, int h, std::vector<int> psi, int lambda);

    friend auto operator<=>(const HodgeBracket&, const HodgeBracket&) = default;
    friend bool operator==(const HodgeBracket&, const HodgeBracket&) = default;
};

/// "(g,h,[j1,...,jh],i)"
std::string to_string(const HodgeBracket& b);
HodgeBracket parse_bracket(std::string_view text);
/// Human form, e.g. "<tau_1 tau_0 lambda_1>_g=1".
std::string pretty(const HodgeBracket& b);

/// Every linear bracket of the (g, h) level, sorted.
std::vector<HodgeBracket> brackets_for(int g, int h);

enum class Provenance { seeded, inverted };
std::string_view to_string(Provenance p);

class HodgeTable {
public:
    struct Entry {
        Rational value;
        Provenance provenance;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// Starts with <tau_0^3>_0 = 1.
    HodgeTable();

    /// A second insertion of a different value is an internal consistency error.
    void insert(const HodgeBracket& b, const Rational& value, Provenance provenance);
    void merge(const HodgeTable& other);

    std::optional<Rational> find(const HodgeBracket& b) const;
    /// Throws Error(missing_bracket) naming the bracket.
    const Rational& at(const HodgeBracket& b) const;

    bool has_level(int g, int h) const;
    const std::map<HodgeBracket, Entry>& entries() const noexcept { return entries_; }

    friend bool operator==(const HodgeTable&, const HodgeTable&) = default;

private:
    std::map<HodgeBracket, Entry> entries_;
};

inline constexpr int kHodgeTableFormatVersion = 1;

/// Sorted, versioned document of every bracket with provenance.
nlohmann::json hodge_export(const HodgeTable& table);
HodgeTable hodge_import(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// ELSV

/// (2g-2+d+h)! / #Aut(mu) * prod mu_i^mu_i / mu_i!
Rational elsv_prefactor(int g, const Partition& mu);

/// H_{g,mu} from the linear Hodge integrals in `table`.
Rational elsv_evaluate(int g, const Partition& mu, const HodgeTable& table);

/// H_{g,mu} / elsv_prefactor(g, mu); a symmetric polynomial in the parts.
Rational normalized_hurwitz(int g, const Partition& mu, const Rational& hurwitz);

/// m_J evaluated at the tuple x: sum over distinct rearrangements of J
/// (padded with zeros to x.size()) of prod x_k^{J_k}.
Rational monomial_symmetric(const Partition& exponents, const std::vector<int>& x);

/// Monomial symmetric basis: all J with at most h parts and |J| in [lo, hi].
std::vector<Partition> symmetric_basis(int h, int lo, int hi);

struct InterpolationOptions {
    /// Largest |mu| a sample may have (engine cost cap).
    int max_sample_degree = kTableMaxDegree;
    /// Independent DFS cross-checks on the cheapest selected samples.
    int dfs_spot_checks = 2;
    Budgets spot_check_budgets{.dfs_max_nodes = 20'000'000};
};

struct SymmetricFit {
    int g = 0;
    int h = 0;
    std::vector<Partition> basis;
    std::vector<Rational> coefficients;
    std::vector<Partition> samples;
    /// Samples confirmed by direct enumeration.
    std::vector<Partition> spot_checked;
    int grid_bound = 0;
};

/// Samples the normalized Hurwitz number on partitions with h parts and fits
/// it in the monomial symmetric basis of degrees [lo, hi]. Samples come from
/// parts in {1..N}, N starting at 3g-1+h; distinct parts are tried first, and
/// N grows until the system has full rank or no affordable samples remain.
SymmetricFit fit_normalized_hurwitz(int g, int h, int lo, int hi, const ConnectedOracle& oracle,
                                    const InterpolationOptions& options = {});

/// Exact fit from explicit samples (tuples of parts with their normalized
/// values); the tuples need not be sorted.
std::vector<Rational> fit_symmetric(const std::vector<Partition>& basis,
                                    const std::vector<std::pair<std::vector<int>, Rational>>& samples);

struct Inversion {
    std::vector<std::pair<HodgeBracket, Rational>> brackets;
    SymmetricFit fit;
};

/// All linear Hodge integrals of level (g, h), recovered from Hurwitz numbers.
Inversion elsv_invert(int g, int h, const ConnectedOracle& oracle, const InterpolationOptions& options = {});

/// Convenience: inverts with Burnside + transform and records the brackets.
Inversion elsv_invert_into(HodgeTable& table, int g, int h, const Budgets& budgets, CharacterTableStore& store,
                           const InterpolationOptions& options = {});

/// The next `count` partitions of the sampling order with h parts that are not
/// in `used` (and have |mu| <= max_degree).
std::vector<Partition> fresh_samples(int g, int h, const std::vector<Partition>& used, std::size_t count,
                                     int max_degree = kTableMaxDegree);

// ---------------------------------------------------------------------------
// String equation

struct StringCheck {
    HodgeBracket lhs;
    std::vector<HodgeBracket> rhs;
    Rational lhs_value;
    Rational rhs_value;
    bool passed = false;
};

struct StringReport {
    std::vector<StringCheck> checks;
    std::size_t skipped = 0;

    bool all_passed() const;
};

/// <tau_0 prod tau_{j_k}>_g = sum_k <tau_{j_k - 1} prod_{i != k} tau_{j_i}>_g
/// for every lambda_0 bracket with a tau_0 insertion whose right-hand side
/// is present in the table.
StringReport string_equation_check(const HodgeTable& table);

} // namespace elsv
