#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polycert {

namespace detail {

template <typename Fn>
void box_points_rec(const LatticeVector& lo, const LatticeVector& hi, const std::vector<std::int64_t>& suffix_lo,
                    const std::vector<std::int64_t>& suffix_hi, std::size_t i, std::int64_t remaining,
                    LatticeVector& z, Fn& fn) {
    const std::size_t n = lo.size();
    if (i + 1 == n) {
        if (remaining < lo[i] || remaining > hi[i]) return;
        z[i] = remaining;
        fn(static_cast<const LatticeVector&>(z));
        return;
    }
    for (std::int64_t v = lo[i]; v <= hi[i]; ++v) {
        const std::int64_t rest = remaining - v;
        if (rest < suffix_lo[i + 1] || rest > suffix_hi[i + 1]) continue;
        z[i] = v;
        box_points_rec(lo, hi, suffix_lo, suffix_hi, i + 1, rest, z, fn);
    }
}

}  // namespace detail

template <typename Fn>
void for_each_box_point(const LatticeVector& lo, const LatticeVector& hi, std::int64_t total, Fn&& fn) {
    const std::size_t n = lo.size();
    if (n == 0) return;
    std::vector<std::int64_t> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        if (lo[i] > hi[i]) return;
        suffix_lo[i] = suffix_lo[i + 1] + lo[i];
        suffix_hi[i] = suffix_hi[i + 1] + hi[i];
    }
    if (total < suffix_lo[0] || total > suffix_hi[0]) return;
    LatticeVector z(n);
    detail::box_points_rec(lo, hi, suffix_lo, suffix_hi, 0, total, z, fn);
}

}  // namespace polycert
