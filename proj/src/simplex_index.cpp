#include "polycert/simplex_index.hpp"

#include "polycert/errors.hpp"

namespace polycert {

namespace {

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > SimplexIndexer::saturated - b ? SimplexIndexer::saturated : a + b;
}

}  // namespace

SimplexIndexer::SimplexIndexer(std::size_t nvars, Exponent degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw PreconditionError("simplex needs at least one variable");
    const std::size_t rows = static_cast<std::size_t>(degree) + nvars + 1;
    binom_.assign(rows, std::vector<std::uint64_t>(nvars, 0));
    for (std::size_t a = 0; a < rows; ++a) {
        binom_[a][0] = 1;
        for (std::size_t b = 1; b < nvars && b <= a; ++b) {
            binom_[a][b] = sat_add(binom_[a - 1][b - 1], b <= a - 1 ? binom_[a - 1][b] : 0);
        }
    }
    size_ = choose(static_cast<std::uint64_t>(degree) + nvars - 1, nvars - 1);
}

std::uint64_t SimplexIndexer::choose(std::uint64_t n, std::uint64_t k) const {
    if (k > n) return 0;
    return binom_[n][k];
}

std::uint64_t SimplexIndexer::rank(const MultiIndex& w) const {
    // Points before w: at coordinate i with remaining sum R and r = n-i-1
    // trailing coordinates, those with a larger value v in (w_i, R] number
    // sum_v C(R-v+r-1, r-1) = C(R-w_i-1+r, r).
    std::uint64_t r = 0;
    std::uint64_t remaining = degree_;
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
        const std::uint64_t trailing = nvars_ - i - 1;
        if (w[i] < remaining) {
            r = sat_add(r, choose(remaining - w[i] - 1 + trailing, trailing));
        }
        remaining -= w[i];
    }
    return r;
}

MultiIndex SimplexIndexer::unrank(std::uint64_t r) const {
    MultiIndex w(nvars_);
    std::uint64_t remaining = degree_;
    for (std::size_t i = 0; i + 1 < nvars_; ++i) {
        const std::uint64_t trailing = nvars_ - i - 1;
        std::uint64_t v = remaining;
        for (;; --v) {
            const std::uint64_t count = choose(remaining - v + trailing - 1, trailing - 1);
            if (r < count) break;
            r -= count;
            if (v == 0) throw PreconditionError("simplex rank out of range");
        }
        w[i] = static_cast<Exponent>(v);
        remaining -= v;
    }
    w[nvars_ - 1] = static_cast<Exponent>(remaining);
    return w;
}

bool SimplexIndexer::next(MultiIndex& w) {
    const std::size_t n = w.size();
    if (n < 2) return false;
    std::size_t i = n - 1;
    while (i-- > 0) {
        if (w[i] > 0) {
            Exponent tail = 0;
            for (std::size_t j = i + 1; j < n; ++j) {
                tail += w[j];
                w[j] = 0;
            }
            w[i] -= 1;
            w[i + 1] = tail + 1;
            return true;
        }
    }
    return false;
}

std::uint64_t simplex_size(std::size_t nvars, Exponent degree) {
    return SimplexIndexer(nvars, degree).size();
}

std::vector<MultiIndex> simplex_points(std::size_t nvars, Exponent degree) {
    std::vector<MultiIndex> out;
    MultiIndex w(nvars);
    w[0] = degree;
    do {
        out.push_back(w);
    } while (SimplexIndexer::next(w));
    return out;
}

}  // namespace polycert
