#include "polycert/newton.hpp"

#include <omp.h>

#include <algorithm>
#include <set>

#include "polycert/errors.hpp"
#include "polycert/exact_lp.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert {

namespace {

/// Incrementally built affine hull of lattice points over Q.
class AffineSpan {
public:
    explicit AffineSpan(const MultiIndex& origin) : origin_(origin) {}

    int dimension() const { return static_cast<int>(rows_.size()); }

    bool contains(const MultiIndex& w) const {
        auto v = reduce(w);
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    }

    /// Adds w; returns false if it was already in the span.
    bool add(const MultiIndex& w) {
        auto v = reduce(w);
        std::size_t p = 0;
        while (p < v.size() && v[p] == 0) ++p;
        if (p == v.size()) return false;
        const Rational inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // Keep rows fully reduced against each other.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = rows_[r][p];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) rows_[r][c] -= f * v[c];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    std::vector<Rational> reduce(const MultiIndex& w) const {
        std::vector<Rational> v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            v[i] = Rational(static_cast<long>(w[i]) - static_cast<long>(origin_[i]));
        }
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational f = v[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rows_[r][c];
        }
        return v;
    }

    MultiIndex origin_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

Integer dot(const std::vector<Integer>& normal, const MultiIndex& w) {
    Integer s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += normal[i] * w[i];
    return s;
}

FaceWitness trivial_witness(std::size_t nvars, bool empty_face) {
    return FaceWitness{std::vector<Integer>(nvars, 0), empty_face ? Integer(1) : Integer(0)};
}

/// Rescales a rational functional with gap `gap` > 0 to coprime integers
/// with gap >= 1.
FaceWitness normalize(const std::vector<Rational>& normal, const Rational& offset, const Rational& gap) {
    std::vector<Rational> scaled;
    scaled.reserve(normal.size() + 1);
    for (const auto& x : normal) scaled.push_back(x / gap);
    scaled.push_back(offset / gap);
    Integer lcm = 1;
    for (const auto& x : scaled) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(scaled.size());
    Integer g = 0;
    for (const auto& x : scaled) {
        Integer v = x.get_num() * (lcm / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (g > 1) {
        for (auto& v : ints) v /= g;
    }
    FaceWitness w;
    w.offset = ints.back();
    ints.pop_back();
    w.normal = std::move(ints);
    return w;
}

std::vector<MultiIndex> select(const NewtonDiagram& s, const std::vector<std::size_t>& idx) {
    std::vector<MultiIndex> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(s.points()[i]);
    return out;
}

void collect_closures(const NewtonDiagram& s, std::size_t start, const AffineSpan& span, int max_dim,
                      std::set<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> closure;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (span.contains(s.points()[i])) closure.push_back(i);
    }
    out.insert(std::move(closure));
    if (span.dimension() >= max_dim) return;
    for (std::size_t j = start; j < s.size(); ++j) {
        AffineSpan next = span;
        if (!next.add(s.points()[j])) continue;
        collect_closures(s, j + 1, next, max_dim, out);
    }
}

}  // namespace

bool verify_face_witness(const NewtonDiagram& parent, const std::vector<MultiIndex>& face,
                         const FaceWitness& witness) {
    if (witness.normal.size() != parent.nvars()) return false;
    if (!parent.includes(face)) return false;
    const NewtonDiagram f(parent.nvars(), face);
    for (const auto& w : parent.points()) {
        const Integer v = dot(witness.normal, w);
        if (f.contains(w)) {
            if (v != witness.offset) return false;
        } else if (v > witness.offset - 1) {
            return false;
        }
    }
    return true;
}

FaceTest is_relative_face(const NewtonDiagram& parent, const std::vector<MultiIndex>& subset) {
    const auto face = canonical_point_set(subset);
    if (!parent.includes(face)) throw PreconditionError("candidate face is not a subset of the Newton diagram");
    const std::size_t n = parent.nvars();
    if (face.empty()) return {true, trivial_witness(n, true)};
    if (face.size() == parent.size()) return {true, trivial_witness(n, false)};

    // Variables: normal (n, free), offset (free), gap t >= 0.
    const NewtonDiagram f(n, face);
    lp::LinearProgram prog;
    prog.num_vars = n + 2;
    prog.free_var.assign(n + 2, true);
    prog.free_var[n + 1] = false;
    for (const auto& w : parent.points()) {
        lp::Constraint row;
        row.coeffs.resize(n + 2);
        for (std::size_t i = 0; i < n; ++i) row.coeffs[i] = w[i];
        row.coeffs[n] = -1;
        row.rhs = 0;
        if (f.contains(w)) {
            row.relation = lp::Relation::equal;
        } else {
            row.coeffs[n + 1] = 1;
            row.relation = lp::Relation::less_equal;
        }
        prog.rows.push_back(std::move(row));
    }
    lp::Constraint cap;
    cap.coeffs.assign(n + 2, 0);
    cap.coeffs[n + 1] = 1;
    cap.relation = lp::Relation::less_equal;
    cap.rhs = 1;
    prog.rows.push_back(std::move(cap));
    prog.objective.assign(n + 2, 0);
    prog.objective[n + 1] = 1;

    const auto sol = lp::solve(prog);
    if (sol.status != lp::Status::optimal || sol.value <= 0) return {false, std::nullopt};
    std::vector<Rational> normal(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
    return {true, normalize(normal, sol.x[n], sol.value)};
}

int affine_dimension(const std::vector<MultiIndex>& points) {
    if (points.empty()) return -1;
    AffineSpan span(points.front());
    for (const auto& w : points) span.add(w);
    return span.dimension();
}

std::vector<RelativeFace> enumerate_relative_faces(const NewtonDiagram& parent, const FaceEnumerationBudget& budget) {
    if (parent.size() > budget.max_points) {
        throw ResourceError("Newton diagram has " + std::to_string(parent.size()) +
                            " points, above the face-enumeration budget of " + std::to_string(budget.max_points) +
                            "; use simplex_faces for full dilated simplices");
    }
    std::vector<RelativeFace> faces;
    const std::size_t n = parent.nvars();
    faces.push_back({parent, {}, trivial_witness(n, true), std::nullopt});
    if (parent.empty()) return faces;

    // A face F satisfies F = aff(F) ∩ S and aff(F) is spanned by an affinely
    // independent subset of F, so the closures below cover every face.
    const int dim = affine_dimension(parent.points());
    std::set<std::vector<std::size_t>> closures;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        AffineSpan span(parent.points()[i]);
        collect_closures(parent, i + 1, span, dim, closures);
    }
    std::vector<std::vector<std::size_t>> candidates(closures.begin(), closures.end());
    std::vector<FaceTest> results(candidates.size());

#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        results[c] = is_relative_face(parent, select(parent, candidates[c]));
    }

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (!results[c].is_face) continue;
        faces.push_back({parent, select(parent, candidates[c]), results[c].witness, std::nullopt});
    }
    std::sort(faces.begin(), faces.end(), [](const RelativeFace& a, const RelativeFace& b) {
        if (a.points.size() != b.points.size()) return a.points.size() < b.points.size();
        return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                                            GradedLexOrder{});
    });
    return faces;
}

std::vector<RelativeFace> simplex_faces(std::size_t nvars, Exponent degree) {
    if (degree == 0) throw PreconditionError("simplex_faces needs a positive degree");
    if (nvars >= 63) throw ResourceError("too many variables for face enumeration");
    const NewtonDiagram parent(nvars, simplex_points(nvars, degree));
    std::vector<RelativeFace> faces;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nvars); ++mask) {
        std::vector<std::size_t> zero;
        FaceWitness witness{std::vector<Integer>(nvars, 0), 0};
        for (std::size_t j = 0; j < nvars; ++j) {
            if (mask >> j & 1) {
                zero.push_back(j);
                witness.normal[j] = -1;
            }
        }
        std::vector<MultiIndex> pts;
        for (const auto& w : parent.points()) {
            if (std::all_of(zero.begin(), zero.end(), [&](std::size_t j) { return w[j] == 0; })) pts.push_back(w);
        }
        faces.push_back({parent, std::move(pts), std::move(witness), std::move(zero)});
    }
    return faces;
}

}  // namespace polycert
