#pragma once

#include "elsv/rational.hpp"

#include <cstddef>
#include <vector>

namespace elsv {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank of a rational matrix (rows of equal length).
std::size_t rank(const RationalMatrix& rows);

/// Solves A x = b exactly. Rows are cleared of denominators and reduced by
/// fraction-free (Bareiss) elimination, then back-substituted over Q.
/// A may have more rows than columns; extra rows must be consistent.
/// Throws Error(singular_system) naming the rank when A lacks full column rank
/// and Error(singular_system) when an extra row is inconsistent.
std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);

/// Row-echelon accumulator used to pick linearly independent sample rows.
class IndependentRows {
public:
    explicit IndependentRows(std::size_t columns) : columns_(columns) {}

    /// Adds the row if it is independent of those already accepted.
    bool try_add(const std::vector<Rational>& row);
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool full() const noexcept { return pivots_.size() == columns_; }

private:
    std::size_t columns_;
    std::vector<std::vector<Rational>> reduced_;
    std::vector<std::size_t> pivots_;
};

} // namespace elsv
