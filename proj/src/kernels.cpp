#include "polycert/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <map>

#include "polycert/errors.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert::kernels {

namespace {

// Dense buffers are bounded independently of the output term cap so that a
// gappy product in high degree falls back to the sparse path.
constexpr std::uint64_t dense_cells_cap = std::uint64_t{1} << 24;

void check_term_budget(std::size_t terms, const Limits& limits) {
    if (terms > limits.max_terms) {
        throw ResourceError("product exceeds the term budget of " + std::to_string(limits.max_terms) + " terms");
    }
}

Exponent product_degree(const Form& f, const Form& g) {
    const std::uint64_t d = std::uint64_t{f.degree()} + g.degree();
    if (d > std::numeric_limits<Exponent>::max()) throw ResourceError("product degree overflows");
    return static_cast<Exponent>(d);
}

struct Block {
    std::uint64_t begin;
    std::uint64_t end;
};

Block thread_block(std::uint64_t total, int thread, int threads) {
    const auto t = static_cast<std::uint64_t>(thread);
    const auto n = static_cast<std::uint64_t>(threads);
    return {total * t / n, total * (t + 1) / n};
}

bool all_even(const MultiIndex& w) {
    return std::all_of(w.begin(), w.end(), [](Exponent e) { return e % 2 == 0; });
}

}  // namespace

Form convolve_reference(const Form& f, const Form& g, const Limits& limits) {
    const Exponent degree = product_degree(f, g);
    if (f.is_zero() || g.is_zero()) return Form::zero(f.nvars(), degree);
    std::map<MultiIndex, Rational, GradedLexOrder> acc;
    for (const auto& a : f.terms()) {
        for (const auto& b : g.terms()) {
            acc[a.exponent + b.exponent] += a.coeff * b.coeff;
            check_term_budget(acc.size(), limits);
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [w, c] : acc) {
        if (c != 0) out.push_back({w, std::move(c)});
    }
    return FormBuilder::adopt_canonical(f.nvars(), degree, std::move(out));
}

bool dense_convolution_fits(const Form& f, const Form& g, const Limits& limits) {
    if (f.is_zero() || g.is_zero()) return false;
    const Exponent degree = product_degree(f, g);
    const auto out_cells = simplex_size(f.nvars(), degree);
    const auto big_cells = simplex_size(f.nvars(), std::max(f.degree(), g.degree()));
    const auto cap = std::max<std::uint64_t>(dense_cells_cap, limits.max_terms);
    return out_cells <= cap && big_cells <= cap;
}

Form convolve_parallel(const Form& f, const Form& g, const Limits& limits) {
    const Exponent degree = product_degree(f, g);
    if (f.is_zero() || g.is_zero()) return Form::zero(f.nvars(), degree);
    if (!dense_convolution_fits(f, g, limits)) throw ResourceError("dense convolution buffer too large");

    // Gather from the operand with fewer terms, look up in the other.
    const Form& small = f.size() <= g.size() ? f : g;
    const Form& large = f.size() <= g.size() ? g : f;
    const SimplexIndexer large_index(large.nvars(), large.degree());
    const SimplexIndexer out_index(f.nvars(), degree);

    std::vector<std::int64_t> large_slot(large_index.size(), -1);
    for (std::size_t i = 0; i < large.size(); ++i) {
        large_slot[large_index.rank(large.terms()[i].exponent)] = static_cast<std::int64_t>(i);
    }

    const std::uint64_t cells = out_index.size();
    std::vector<Rational> dense(cells);
    const std::size_t n = f.nvars();

#pragma omp parallel
    {
        const Block block = thread_block(cells, omp_get_thread_num(), omp_get_num_threads());
        if (block.begin < block.end) {
            MultiIndex w = out_index.unrank(block.begin);
            MultiIndex diff(n);
            Rational prod;
            for (std::uint64_t r = block.begin; r < block.end; ++r) {
                Rational& cell = dense[r];
                for (const auto& t : small.terms()) {
                    if (!w.dominates(t.exponent)) continue;
                    for (std::size_t i = 0; i < n; ++i) diff[i] = w[i] - t.exponent[i];
                    const auto slot = large_slot[large_index.rank(diff)];
                    if (slot < 0) continue;
                    mpq_mul(prod.get_mpq_t(), t.coeff.get_mpq_t(), large.terms()[slot].coeff.get_mpq_t());
                    cell += prod;
                }
                SimplexIndexer::next(w);
            }
        }
    }

    std::size_t nonzero = 0;
    for (const auto& c : dense) nonzero += (c != 0);
    check_term_budget(nonzero, limits);

    std::vector<Term> out;
    out.reserve(nonzero);
    MultiIndex w = out_index.unrank(0);
    for (std::uint64_t r = 0; r < cells; ++r) {
        if (dense[r] != 0) out.push_back({w, std::move(dense[r])});
        SimplexIndexer::next(w);
    }
    return FormBuilder::adopt_canonical(f.nvars(), degree, std::move(out));
}

Form convolve(const Form& f, const Form& g, const Limits& limits) {
    if (dense_convolution_fits(f, g, limits)) return convolve_parallel(f, g, limits);
    return convolve_reference(f, g, limits);
}

Rational eval_at(const Form& q, const std::vector<Integer>& point) {
    Integer num_sum = 0;
    Rational sum = 0;
    Integer mono;
    Integer power;
    // Integer coefficients accumulate in mpz without canonicalization.
    for (const auto& t : q.terms()) {
        mono = 1;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const auto e = t.exponent[i];
            if (e == 0) continue;
            mpz_pow_ui(power.get_mpz_t(), point[i].get_mpz_t(), e);
            mono *= power;
        }
        if (t.coeff.get_den() == 1) {
            num_sum += mono * t.coeff.get_num();
        } else {
            sum += Rational(mono) * t.coeff;
        }
    }
    sum += Rational(num_sum);
    return sum;
}

std::optional<GridHit> first_nonpositive_grid_point_reference(const Form& q, Exponent denominator,
                                                               bool skip_coarse) {
    MultiIndex w(q.nvars());
    w[0] = denominator;
    std::uint64_t rank = 0;
    std::vector<Integer> point(q.nvars());
    do {
        if (!(skip_coarse && all_even(w))) {
            for (std::size_t i = 0; i < w.size(); ++i) point[i] = w[i];
            Rational v = eval_at(q, point);
            if (v <= 0) return GridHit{rank, point, v};
        }
        ++rank;
    } while (SimplexIndexer::next(w));
    return std::nullopt;
}

std::optional<GridHit> first_nonpositive_grid_point(const Form& q, Exponent denominator, bool skip_coarse) {
    const SimplexIndexer index(q.nvars(), denominator);
    const std::uint64_t cells = index.size();
    if (cells == SimplexIndexer::saturated) throw ResourceError("grid too large");

    std::uint64_t best = cells;
#pragma omp parallel
    {
        const Block block = thread_block(cells, omp_get_thread_num(), omp_get_num_threads());
        std::uint64_t local = cells;
        if (block.begin < block.end) {
            MultiIndex w = index.unrank(block.begin);
            std::vector<Integer> point(q.nvars());
            for (std::uint64_t r = block.begin; r < block.end; ++r) {
                if (!(skip_coarse && all_even(w))) {
                    for (std::size_t i = 0; i < w.size(); ++i) point[i] = w[i];
                    if (eval_at(q, point) <= 0) {
                        local = r;
                        break;
                    }
                }
                SimplexIndexer::next(w);
            }
        }
#pragma omp critical(polycert_grid_min)
        best = std::min(best, local);
    }
    if (best == cells) return std::nullopt;

    const MultiIndex w = index.unrank(best);
    std::vector<Integer> point(w.begin(), w.end());
    Rational v = eval_at(q, point);
    return GridHit{best, std::move(point), std::move(v)};
}

}  // namespace polycert::kernels
