#pragma once

#include "elsv/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace elsv {

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the empty partition, with size and length zero.
class Partition {
public:
    Partition() = default;

    /// Throws Error(invalid_argument) unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts the parts first; any order of positive parts is accepted.
    static Partition from_unsorted(std::vector<int> parts);

    /// (1^d)
    static Partition column(int d);
    /// (d), or the empty partition for d = 0
    static Partition row(int d);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int operator[](std::size_t i) const { return parts_[i]; }
    bool empty() const noexcept { return parts_.empty(); }

    int size() const noexcept;                 // |mu|
    int length() const noexcept { return static_cast<int>(parts_.size()); } // l(mu)

    Partition transpose() const;

    /// Multiset union (parts concatenated and re-sorted).
    Partition merged(const Partition& other) const;

    /// True when this partition's parts form a sub-multiset of `other`'s.
    bool is_submultiset_of(const Partition& other) const;

    /// Multiplicity of each part value 1..max part (index 0 unused).
    std::vector<int> multiplicities() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of d in reverse-lexicographic order; d = 0 gives [empty].
std::vector<Partition> partitions_of(int d);

/// Partitions of d with exactly `length` parts, reverse-lexicographic.
std::vector<Partition> partitions_of(int d, int length);

/// All sub-multisets of `mu` (including the empty one and `mu` itself).
std::vector<Partition> submultisets(const Partition& mu);

/// Product of factorials of the part multiplicities.
BigInt aut_size(const Partition& mu);

/// Centralizer order: product of parts times aut_size.
BigInt z(const Partition& mu);

/// Sum over i of nu_i (nu_i - 2i + 1), with i counted from 1.
long kappa(const Partition& nu);

/// |mu|! / z(mu)
BigInt class_size(const Partition& mu);

/// Comma-separated parts, e.g. "3,2,1"; the empty partition is "".
std::string to_string(const Partition& mu);

/// Inverse of to_string. Input order is forgiven; parts are sorted.
Partition parse_partition(std::string_view text);

} // namespace elsv
