#pragma once

// Compute kernels behind form arithmetic and the simplex grid scan. Each
// kernel has an OpenMP implementation and a serial reference that is kept
// for cross-checking in tests and benchmarks. Results never depend on the
// thread schedule.

#include <cstdint>
#include <optional>
#include <vector>

#include "polycert/form.hpp"

namespace polycert::kernels {

/// Scatter convolution through an ordered map. Slow, obviously correct.
Form convolve_reference(const Form& f, const Form& g, const Limits& limits);

/// Gather convolution over the dense output simplex: each output monomial
/// is owned by exactly one thread, which sums its contributions in a fixed
/// order. Requires dense_convolution_fits().
Form convolve_parallel(const Form& f, const Form& g, const Limits& limits);

bool dense_convolution_fits(const Form& f, const Form& g, const Limits& limits);

/// Dispatch used by mul(): dense parallel when it fits, reference otherwise.
Form convolve(const Form& f, const Form& g, const Limits& limits);

/// q evaluated at an integer point.
Rational eval_at(const Form& q, const std::vector<Integer>& point);

struct GridHit {
    std::uint64_t rank;
    std::vector<Integer> point;  // lattice point w with |w| = denominator
    Rational value;              // q(w); sign equals that of q(w / denominator)
};

/// First lattice point w of (Z_+^n)_D in canonical order with q(w) <= 0.
/// With skip_coarse, points whose coordinates are all even are skipped
/// (they were already visited at denominator D/2).
std::optional<GridHit> first_nonpositive_grid_point_reference(const Form& q, Exponent denominator,
                                                               bool skip_coarse);
std::optional<GridHit> first_nonpositive_grid_point(const Form& q, Exponent denominator, bool skip_coarse);

}  // namespace polycert::kernels
