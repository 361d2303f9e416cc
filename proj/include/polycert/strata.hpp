#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "polycert/newton.hpp"

namespace polycert {

using LatticeVector = std::vector<std::int64_t>;

enum class Dominance { yes, no, unknown_at_bound };

const char* to_string(Dominance d);

/// A translate of a dilate: the set kF + z.
struct Placement {
    unsigned k = 1;
    LatticeVector z;

    friend bool operator==(const Placement&, const Placement&) = default;
};

/// Finite window on the placements quantified over by the stratum
/// definition. The z-box for each k is derived from the sets involved.
struct StratumBounds {
    unsigned k_max = 1;

    /// ceil(e/d) + 2
    static StratumBounds for_degrees(std::uint64_t face_degree, std::uint64_t ambient_degree);
};

struct Stratum {
    NewtonDiagram ambient;  // S
    RelativeFace face;      // F, whose parent is Log(p)
    std::vector<MultiIndex> points;  // E, canonical order
    Dominance dominant = Dominance::unknown_at_bound;
    std::vector<Placement> placements;     // each with E ⊆ kF + z
    std::optional<Placement> violation;    // refutes dominance when set
    unsigned k_max = 0;                    // bound the result was computed under
    bool exact = false;                    // stratum property holds for every k, not just k <= k_max
    std::optional<std::vector<Exponent>> beta;  // closed form: E = {w in S : w_J = beta}
};

/// Memo of k-fold Minkowski sums kF, built by kF = (k-1)F + F.
class MinkowskiSums {
public:
    explicit MinkowskiSums(std::vector<MultiIndex> base);

    /// Fills every level up to k. Call before sharing across threads.
    void prepare(unsigned k);
    const std::unordered_set<MultiIndex, MultiIndexHash>& dilate(unsigned k);
    /// v ∈ kF + z; requires prepare(k).
    bool contains_translate(unsigned k, const MultiIndex& v, const LatticeVector& z) const;

private:
    std::vector<MultiIndex> base_;
    std::vector<std::unordered_set<MultiIndex, MultiIndexHash>> levels_;  // levels_[k-1] = kF
};

/// Strata E_{J,beta} of S = (Z_+^n)_e with respect to F_J of (Z_+^n)_d.
/// J holds 0-based coordinates; J = [n] is rejected.
std::vector<Stratum> closed_form_strata(std::size_t nvars, Exponent face_degree, Exponent ambient_degree,
                                        const std::vector<std::size_t>& zero_coordinates);

/// All strata of S with respect to F under the bound, with dominance
/// decided by is_dominant_bounded against F.parent.
std::vector<Stratum> enumerate_strata_bounded(const NewtonDiagram& ambient, const RelativeFace& face,
                                              const StratumBounds& bounds);

struct DominanceCheck {
    Dominance verdict = Dominance::unknown_at_bound;
    std::optional<Placement> violation;
};

DominanceCheck is_dominant_bounded(const Stratum& stratum, const NewtonDiagram& logp, const StratumBounds& bounds);

/// Calls fn(z) for every integer vector with lo <= z <= hi and sum(z) == total.
template <typename Fn>
void for_each_box_point(const LatticeVector& lo, const LatticeVector& hi, std::int64_t total, Fn&& fn);

}  // namespace polycert

#include "polycert/detail/box_points.hpp"
