#include "polycert/newton_diagram.hpp"

#include "polycert/errors.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert {

std::vector<MultiIndex> canonical_point_set(std::vector<MultiIndex> points) {
    std::sort(points.begin(), points.end(), GradedLexOrder{});
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

NewtonDiagram::NewtonDiagram(std::size_t nvars, std::vector<MultiIndex> points)
    : nvars_(nvars), points_(canonical_point_set(std::move(points))) {
    for (const auto& w : points_) {
        if (w.size() != nvars_) throw PreconditionError("exponent vector has wrong dimension");
    }
}

std::optional<std::uint64_t> NewtonDiagram::homogeneous_degree() const {
    if (points_.empty()) return std::nullopt;
    const auto d = points_.front().total();
    for (const auto& w : points_) {
        if (w.total() != d) return std::nullopt;
    }
    return d;
}

bool NewtonDiagram::is_full_simplex() const {
    const auto d = homogeneous_degree();
    if (!d) return false;
    return points_.size() == simplex_size(nvars_, static_cast<Exponent>(*d));
}

bool NewtonDiagram::includes(const std::vector<MultiIndex>& subset) const {
    return std::all_of(subset.begin(), subset.end(), [&](const MultiIndex& w) { return contains(w); });
}

}  // namespace polycert
