#pragma once

#include "elsv/partitions.hpp"
#include "elsv/rational.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace elsv {

/// Largest degree for which character values are computed (64-bit entries).
inline constexpr int kCharacterMaxDegree = 20;
/// Default ceiling for full character tables.
inline constexpr int kTableMaxDegree = 14;

/// Number of standard Young tableaux of shape nu (hook length formula).
BigInt dim_irrep(const Partition& nu);

/// chi_nu(C_mu) by the Murnaghan-Nakayama rule.
/// Throws Error(dimension_mismatch) if |nu| != |mu|.
std::int64_t character(const Partition& nu, const Partition& mu);

/// Irreducible characters of S_d. Rows are irreducibles nu, columns are
/// classes mu, both in partitions_of(d) order.
class CharacterTable {
public:
    CharacterTable(int d, std::vector<Partition> partitions, std::vector<std::int64_t> entries);

    int degree() const noexcept { return d_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }

    std::int64_t at(std::size_t nu, std::size_t mu) const { return entries_[nu * size() + mu]; }
    std::int64_t value(const Partition& nu, const Partition& mu) const;
    std::size_t index_of(const Partition& p) const;

    /// dim R_nu, read off the identity column.
    std::int64_t dimension(std::size_t nu) const { return at(nu, size() - 1); }

    /// Checks row orthogonality exactly; throws Error(internal_consistency).
    void verify_orthogonality() const;
    /// Column orthogonality: sum_nu chi_nu(mu) chi_nu(mu') = z_mu delta.
    bool columns_orthogonal() const;

    nlohmann::json to_json() const;
    /// Throws Error(parse_error) on malformed or mismatched documents.
    static CharacterTable from_json(const nlohmann::json& doc);

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

private:
    int d_;
    std::vector<Partition> partitions_;
    std::vector<std::int64_t> entries_;
    std::map<Partition, std::size_t> index_;
};

inline constexpr int kCharacterTableFormatVersion = 1;

/// Full table for S_d; verifies orthogonality before returning.
/// d above max_d is rejected with Error(resource_limit).
CharacterTable build_table(int d, int max_d = kTableMaxDegree);

/// In-memory table cache with optional persistence to a directory.
class CharacterTableStore {
public:
    explicit CharacterTableStore(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                                 int max_d = kTableMaxDegree);

    const CharacterTable& get(int d);

    std::optional<std::filesystem::path> cache_file(int d) const;
    int max_degree() const noexcept { return max_d_; }

private:
    std::optional<std::filesystem::path> dir_;
    int max_d_;
    std::mutex mutex_;
    std::map<int, std::unique_ptr<CharacterTable>> tables_;
};

} // namespace elsv
