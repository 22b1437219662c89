#pragma once

#include "elsv/partitions.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace elsv {

/// A permutation of {0, ..., d-1} in one-line notation: p(x) = images()[x].
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int d);
    static Permutation transposition(int d, int a, int b);

    /// Cycles (0..mu_1-1)(mu_1..mu_1+mu_2-1)... in order.
    static Permutation canonical(const Partition& cycle_type);

    int degree() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const noexcept { return images_; }

    /// Function composition: (p * q)(x) = p(q(x)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    Permutation inverse() const;

    Partition cycle_type() const;
    int cycle_count() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// All C(d,2) transpositions (a,b), a < b, in lexicographic order.
std::vector<std::pair<int, int>> transposition_pairs(int d);

/// Lehmer-code rank in [0, d!) and its inverse.
std::uint32_t rank(const Permutation& p);
Permutation unrank(int d, std::uint32_t index);

/// Which side a newly chosen factor is composed on when reading a tuple.
/// right_to_left: sigma_1 * sigma_2 * ... * sigma_r (sigma_r applied first).
enum class Composition { right_to_left, left_to_right };

} // namespace elsv
