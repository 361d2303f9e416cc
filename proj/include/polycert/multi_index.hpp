#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace polycert {

using Exponent = std::uint32_t;

/// Exponent vector w in Z_+^n. Dimension is fixed by the owning form.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
    MultiIndex(std::initializer_list<Exponent> exps) : exps_(exps) {}
    explicit MultiIndex(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    Exponent& operator[](std::size_t i) { return exps_[i]; }

    /// |w| = w_1 + ... + w_n
    std::uint64_t total() const noexcept {
        std::uint64_t t = 0;
        for (auto e : exps_) t += e;
        return t;
    }

    auto begin() const noexcept { return exps_.begin(); }
    auto end() const noexcept { return exps_.end(); }
    const std::vector<Exponent>& values() const noexcept { return exps_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
    friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps_ <=> b.exps_; }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        MultiIndex r(a);
        for (std::size_t i = 0; i < r.size(); ++i) r.exps_[i] += b.exps_[i];
        return r;
    }

    /// True iff every component of this is >= the matching component of other.
    bool dominates(const MultiIndex& other) const noexcept {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] < other.exps_[i]) return false;
        }
        return true;
    }

private:
    std::vector<Exponent> exps_;
};

/// Canonical term order: larger total degree first, then descending lex
/// (x1^2 before x1 x2 before x2^2).
struct GradedLexOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        const auto ta = a.total();
        const auto tb = b.total();
        if (ta != tb) return ta > tb;
        return a > b;
    }
};

struct MultiIndexHash {
    std::size_t operator()(const MultiIndex& w) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto e : w) h = (h ^ e) * 0x100000001b3ULL;
        return h;
    }
};

/// Every vector in (Z_+^n)_d, in canonical order.
std::vector<MultiIndex> simplex_points(std::size_t nvars, Exponent degree);

}  // namespace polycert
