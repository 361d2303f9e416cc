#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "polycert/multi_index.hpp"

namespace polycert {

/// Bijection between the dilated simplex (Z_+^n)_d and [0, size) following
/// GradedLexOrder, so dense buffers indexed by rank are already canonical.
class SimplexIndexer {
public:
    static constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

    SimplexIndexer(std::size_t nvars, Exponent degree);

    std::size_t nvars() const noexcept { return nvars_; }
    Exponent degree() const noexcept { return degree_; }

    /// C(d+n-1, n-1); `saturated` if it does not fit in 64 bits.
    std::uint64_t size() const noexcept { return size_; }

    std::uint64_t rank(const MultiIndex& w) const;
    MultiIndex unrank(std::uint64_t r) const;

    /// Advances w to its successor; returns false past the last point.
    static bool next(MultiIndex& w);

private:
    std::uint64_t choose(std::uint64_t n, std::uint64_t k) const;

    std::size_t nvars_;
    Exponent degree_;
    // binom_[a][b] = C(a, b) for b < nvars_, saturating.
    std::vector<std::vector<std::uint64_t>> binom_;
    std::uint64_t size_;
};

/// Number of points of (Z_+^n)_d, saturating at SimplexIndexer::saturated.
std::uint64_t simplex_size(std::size_t nvars, Exponent degree);

}  // namespace polycert
