#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "polycert/form.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int lo, int hi, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rational(num(rng), den(rng));
}

/// Each monomial of degree d is kept with probability `density`; coefficients
/// are drawn from [lo, hi] / [1, max_den].
inline Form random_form(Rng& rng, std::size_t n, Exponent d, int lo, int hi, double density = 0.7) {
    std::bernoulli_distribution keep(density);
    std::vector<Term> terms;
    for (const auto& w : simplex_points(n, d)) {
        if (keep(rng)) terms.push_back({w, small_rational(rng, lo, hi)});
    }
    return Form::from_terms(n, d, std::move(terms));
}

/// Every monomial present with a coefficient in [1, hi] / [1, 3].
inline Form random_strictly_positive(Rng& rng, std::size_t n, Exponent d, int hi = 5) {
    std::vector<Term> terms;
    for (const auto& w : simplex_points(n, d)) terms.push_back({w, small_rational(rng, 1, hi)});
    return Form::from_terms(n, d, std::move(terms));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace polycert::testing
