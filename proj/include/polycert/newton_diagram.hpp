#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "polycert/multi_index.hpp"

namespace polycert {

/// Finite set of exponent vectors (the support Log(p) of a form), kept
/// sorted in GradedLexOrder without duplicates.
class NewtonDiagram {
public:
    NewtonDiagram() = default;
    NewtonDiagram(std::size_t nvars, std::vector<MultiIndex> points);

    std::size_t nvars() const noexcept { return nvars_; }
    const std::vector<MultiIndex>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    bool contains(const MultiIndex& w) const {
        return std::binary_search(points_.begin(), points_.end(), w, GradedLexOrder{});
    }

    /// Common total degree of all points, if they share one.
    std::optional<std::uint64_t> homogeneous_degree() const;

    /// True iff the points are exactly (Z_+^n)_d for their common degree d.
    bool is_full_simplex() const;

    bool includes(const std::vector<MultiIndex>& subset) const;

    friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;

private:
    std::size_t nvars_ = 0;
    std::vector<MultiIndex> points_;
};

/// Sorts into canonical order and removes duplicates.
std::vector<MultiIndex> canonical_point_set(std::vector<MultiIndex> points);

}  // namespace polycert
