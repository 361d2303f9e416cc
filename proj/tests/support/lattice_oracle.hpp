#pragma once

#include <functional>
#include <vector>

#include "polycert/multi_index.hpp"
#include "polycert/strata.hpp"

namespace polycert::testing {

/// Naive check that v - z is a sum of exactly k points of F, by walking all
/// multisets of size k (nondecreasing index sequences).
inline bool is_k_fold_sum(const std::vector<MultiIndex>& f, unsigned k, const MultiIndex& v, const LatticeVector& z) {
    const std::size_t n = v.size();
    LatticeVector target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = static_cast<std::int64_t>(v[i]) - z[i];
    for (auto t : target) {
        if (t < 0) return false;
    }
    LatticeVector acc(n, 0);
    std::function<bool(std::size_t, unsigned)> walk = [&](std::size_t from, unsigned left) {
        if (left == 0) return acc == target;
        for (std::size_t i = from; i < f.size(); ++i) {
            bool fits = true;
            for (std::size_t c = 0; c < n; ++c) {
                acc[c] += f[i][c];
                if (acc[c] > target[c]) fits = false;
            }
            const bool found = fits && walk(i, left - 1);
            for (std::size_t c = 0; c < n; ++c) acc[c] -= f[i][c];
            if (found) return true;
        }
        return false;
    };
    return walk(0, k);
}

/// (kF + z) ∩ S by the naive test.
inline std::vector<MultiIndex> placed_slice(const std::vector<MultiIndex>& f, unsigned k, const LatticeVector& z,
                                            const std::vector<MultiIndex>& s) {
    std::vector<MultiIndex> out;
    for (const auto& w : s) {
        if (is_k_fold_sum(f, k, w, z)) out.push_back(w);
    }
    return out;
}

}  // namespace polycert::testing
