#pragma once

#include <string>
#include <vector>

#include "generators.hpp"
#include "polycert/form.hpp"
#include "polycert/parse.hpp"

namespace polycert::testing {

struct PropertyReport {
    int cases = 0;
    std::vector<std::string> failures;
};

/// Randomized algebraic laws on forms: multiplicativity of strict
/// positivity, ring laws, pow additivity, permutation equivariance and the
/// print/parse round trip. Each case draws fresh forms in 1..4 variables.
inline PropertyReport run_algebraic_properties(std::uint64_t seed, int cases) {
    PropertyReport rep;
    Rng rng(seed);
    auto fail = [&](int i, const std::string& what) { rep.failures.push_back("case " + std::to_string(i) + ": " + what); };
    for (int i = 0; i < cases; ++i) {
        ++rep.cases;
        const std::size_t n = 1 + rng() % 4;
        const Exponent da = rng() % 4, db = rng() % 3;
        const auto f = random_form(rng, n, da, -5, 5);
        const auto g = random_form(rng, n, db, -5, 5);
        const auto h = random_form(rng, n, db, -5, 5);
        const auto k = random_form(rng, n, da, -5, 5);

        const auto sf = random_strictly_positive(rng, n, da);
        const auto sg = random_strictly_positive(rng, n, db);
        if (!has_strictly_positive_coefficients(mul(sf, sg))) fail(i, "strict positivity not multiplicative");

        if (!(mul(f, g) == mul(g, f))) fail(i, "multiplication not commutative");
        if (!(mul(mul(f, g), h) == mul(f, mul(g, h)))) fail(i, "multiplication not associative");
        if (!(mul(f, add(g, h)) == add(mul(f, g), mul(f, h)))) fail(i, "distributivity");
        if (!(add(add(f, k), f) == add(f, add(k, f)))) fail(i, "addition not associative");
        if (!(add(g, h) == add(h, g))) fail(i, "addition not commutative");
        if (!sub(g, g).is_zero()) fail(i, "additive inverse");
        if (!(mul(f, Form::constant(n, 1)) == f)) fail(i, "multiplicative identity");

        const unsigned a = rng() % 4, b = rng() % 3;
        if (!(pow(f, a + b) == mul(pow(f, a), pow(f, b)))) fail(i, "pow additivity");

        const auto perm = random_permutation(rng, n);
        if (!(permute_variables(mul(f, g), perm) == mul(permute_variables(f, perm), permute_variables(g, perm)))) {
            fail(i, "permutation does not commute with multiplication");
        }
        std::vector<Rational> x(n), px(n);
        for (std::size_t v = 0; v < n; ++v) x[v] = small_rational(rng, -3, 3);
        for (std::size_t v = 0; v < n; ++v) px[perm[v]] = x[v];
        if (eval(permute_variables(f, perm), px) != eval(f, x)) fail(i, "permutation does not commute with evaluation");
        if (eval(mul(f, g), x) != eval(f, x) * eval(g, x)) fail(i, "evaluation not multiplicative");

        for (const Form* form : {&f, &g}) {
            const auto text = to_string(*form);
            if (!(parse_form(text, n) == *form)) fail(i, "print/parse round trip: " + text);
            if (to_string(parse_form(text, n)) != text) fail(i, "printing not canonical: " + text);
        }
    }
    return rep;
}

}  // namespace polycert::testing
