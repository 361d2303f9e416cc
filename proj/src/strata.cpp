#include "polycert/strata.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <map>

#include "polycert/errors.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert {

namespace {

using IndexSet = std::vector<std::size_t>;

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

std::uint64_t common_degree(const std::vector<MultiIndex>& pts, const char* what) {
    if (pts.empty()) throw PreconditionError(std::string(what) + " is empty");
    const auto d = pts.front().total();
    for (const auto& w : pts) {
        if (w.total() != d) throw PreconditionError(std::string(what) + " is not homogeneous");
    }
    return d;
}

struct CoordinateRange {
    std::vector<std::int64_t> lo;
    std::vector<std::int64_t> hi;
};

CoordinateRange coordinate_range(const std::vector<MultiIndex>& pts, std::size_t n) {
    CoordinateRange r{std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::max()),
                      std::vector<std::int64_t>(n, std::numeric_limits<std::int64_t>::min())};
    for (const auto& w : pts) {
        for (std::size_t i = 0; i < n; ++i) {
            r.lo[i] = std::min<std::int64_t>(r.lo[i], w[i]);
            r.hi[i] = std::max<std::int64_t>(r.hi[i], w[i]);
        }
    }
    return r;
}

std::vector<std::size_t> zero_coordinates_of(const std::vector<MultiIndex>& face, std::size_t n) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::all_of(face.begin(), face.end(), [&](const MultiIndex& w) { return w[i] == 0; })) j.push_back(i);
    }
    return j;
}

bool same_points(const std::vector<MultiIndex>& a, const std::vector<MultiIndex>& b) {
    return a == b;
}

/// Points of s with w_J = beta.
std::vector<MultiIndex> slice(const std::vector<MultiIndex>& s, const std::vector<std::size_t>& j,
                              const std::vector<Exponent>& beta) {
    std::vector<MultiIndex> out;
    for (const auto& w : s) {
        bool match = true;
        for (std::size_t t = 0; t < j.size(); ++t) {
            if (w[j[t]] != beta[t]) {
                match = false;
                break;
            }
        }
        if (match) out.push_back(w);
    }
    return out;
}

}  // namespace

const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::yes: return "yes";
        case Dominance::no: return "no";
        case Dominance::unknown_at_bound: return "unknown-at-bound";
    }
    return "?";
}

StratumBounds StratumBounds::for_degrees(std::uint64_t face_degree, std::uint64_t ambient_degree) {
    if (face_degree == 0) throw PreconditionError("face degree must be positive");
    return {static_cast<unsigned>(ceil_div(ambient_degree, face_degree) + 2)};
}

MinkowskiSums::MinkowskiSums(std::vector<MultiIndex> base) : base_(canonical_point_set(std::move(base))) {
    if (base_.empty()) throw PreconditionError("Minkowski sums of an empty set");
}

void MinkowskiSums::prepare(unsigned k) {
    if (levels_.empty()) levels_.emplace_back(base_.begin(), base_.end());
    while (levels_.size() < k) {
        std::unordered_set<MultiIndex, MultiIndexHash> next;
        for (const auto& u : levels_.back()) {
            for (const auto& v : base_) next.insert(u + v);
        }
        levels_.push_back(std::move(next));
    }
}

const std::unordered_set<MultiIndex, MultiIndexHash>& MinkowskiSums::dilate(unsigned k) {
    if (k == 0) throw PreconditionError("dilation factor must be positive");
    prepare(k);
    return levels_[k - 1];
}

bool MinkowskiSums::contains_translate(unsigned k, const MultiIndex& v, const LatticeVector& z) const {
    MultiIndex u(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(v[i]) - z[i];
        if (d < 0) return false;
        u[i] = static_cast<Exponent>(d);
    }
    return levels_[k - 1].contains(u);
}

std::vector<Stratum> closed_form_strata(std::size_t nvars, Exponent face_degree, Exponent ambient_degree,
                                        const std::vector<std::size_t>& zero_coordinates) {
    auto j = zero_coordinates;
    std::sort(j.begin(), j.end());
    j.erase(std::unique(j.begin(), j.end()), j.end());
    for (auto c : j) {
        if (c >= nvars) throw PreconditionError("coordinate index out of range");
    }
    if (j.size() == nvars) throw PreconditionError("J = [n] gives the empty face, which has no strata");
    if (ambient_degree == 0) throw PreconditionError("ambient degree must be positive");

    std::uint64_t mask = 0;
    for (auto c : j) mask |= std::uint64_t{1} << c;
    auto faces = simplex_faces(nvars, face_degree);
    const RelativeFace& face = faces[mask];
    const NewtonDiagram ambient(nvars, simplex_points(nvars, ambient_degree));
    const auto bounds = StratumBounds::for_degrees(face_degree, ambient_degree);

    // Placement from the proof of the closed form: l*d >= e, y_J = beta and
    // y <= 0 off J, with the deficit on the first free coordinate.
    const unsigned l = static_cast<unsigned>(std::max<std::uint64_t>(1, ceil_div(ambient_degree, face_degree)));
    const std::int64_t deficit = static_cast<std::int64_t>(ambient_degree) - static_cast<std::int64_t>(l) * face_degree;
    std::size_t first_free = 0;
    while (std::binary_search(j.begin(), j.end(), first_free)) ++first_free;

    std::vector<Stratum> out;
    // Enumerate beta in Z_+^J with |beta| <= e, by |beta| then canonical order.
    for (Exponent total = 0; total <= ambient_degree; ++total) {
        if (j.empty() && total > 0) break;
        std::vector<MultiIndex> betas = j.empty() ? std::vector<MultiIndex>{MultiIndex{}} : simplex_points(j.size(), total);
        for (const auto& b : betas) {
            std::vector<Exponent> beta(b.begin(), b.end());
            Stratum st;
            st.ambient = ambient;
            st.face = face;
            st.points = j.empty() ? ambient.points() : slice(ambient.points(), j, beta);
            st.k_max = bounds.k_max;
            st.exact = true;
            LatticeVector y(nvars, 0);
            for (std::size_t t = 0; t < j.size(); ++t) y[j[t]] = beta[t];
            y[first_free] = deficit - static_cast<std::int64_t>(total);
            st.placements.push_back({l, y});
            if (total == 0) {
                st.dominant = Dominance::yes;
            } else {
                st.dominant = Dominance::no;
                LatticeVector z(nvars, 0);
                z[first_free] = deficit;
                st.violation = Placement{l, z};
            }
            st.beta = std::move(beta);
            out.push_back(std::move(st));
        }
    }
    return out;
}

DominanceCheck is_dominant_bounded(const Stratum& stratum, const NewtonDiagram& logp, const StratumBounds& bounds) {
    const auto& face = stratum.face.points;
    const auto& e_pts = stratum.points;
    const auto& s_pts = stratum.ambient.points();
    if (face.empty() || e_pts.empty()) throw PreconditionError("dominance needs a nonempty face and stratum");
    // Improper face: (kP+z) \ (kF+z) is empty, so the condition is vacuous.
    if (same_points(face, logp.points())) return {Dominance::yes, std::nullopt};
    // E = S: (kF+z) ∩ S = (kF+z) ∩ E, empty whenever E avoids kF+z.
    if (same_points(e_pts, s_pts)) return {Dominance::yes, std::nullopt};

    const std::size_t n = logp.nvars();
    const auto d = common_degree(logp.points(), "Newton diagram");
    const auto e = common_degree(s_pts, "ambient set");
    MinkowskiSums whole(logp.points());
    MinkowskiSums part(face);
    whole.prepare(bounds.k_max);
    part.prepare(bounds.k_max);
    const auto er = coordinate_range(e_pts, n);
    const auto pr = coordinate_range(logp.points(), n);

    std::vector<std::optional<Placement>> found(bounds.k_max + 1);
#pragma omp parallel for schedule(dynamic)
    for (unsigned k = 1; k <= bounds.k_max; ++k) {
        // E ⊆ kP + z forces max_E w_i - k max_P v_i <= z_i <= min_E w_i - k min_P v_i.
        LatticeVector lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = er.hi[i] - static_cast<std::int64_t>(k) * pr.hi[i];
            hi[i] = er.lo[i] - static_cast<std::int64_t>(k) * pr.lo[i];
        }
        const std::int64_t total = static_cast<std::int64_t>(e) - static_cast<std::int64_t>(k * d);
        bool done = false;
        for_each_box_point(lo, hi, total, [&](const LatticeVector& z) {
            if (done) return;
            for (const auto& w : e_pts) {
                if (!whole.contains_translate(k, w, z) || part.contains_translate(k, w, z)) return;
            }
            for (const auto& w : s_pts) {
                if (part.contains_translate(k, w, z)) {
                    found[k] = Placement{k, z};
                    done = true;
                    return;
                }
            }
        });
    }
    for (unsigned k = 1; k <= bounds.k_max; ++k) {
        if (found[k]) return {Dominance::no, found[k]};
    }

    // Closed form for full dilated simplices: E_{J,beta} is dominant iff beta = 0.
    if (logp.is_full_simplex() && stratum.ambient.is_full_simplex() && stratum.exact) {
        const auto j = zero_coordinates_of(face, n);
        const bool beta_zero = std::all_of(e_pts.begin(), e_pts.end(), [&](const MultiIndex& w) {
            return std::all_of(j.begin(), j.end(), [&](std::size_t c) { return w[c] == 0; });
        });
        if (beta_zero) return {Dominance::yes, std::nullopt};
    }
    return {Dominance::unknown_at_bound, std::nullopt};
}

std::vector<Stratum> enumerate_strata_bounded(const NewtonDiagram& ambient, const RelativeFace& face,
                                              const StratumBounds& bounds) {
    if (face.points.empty()) throw PreconditionError("strata need a nonempty face");
    if (bounds.k_max == 0) throw PreconditionError("k_max must be positive");
    if (ambient.empty()) return {};
    const std::size_t n = ambient.nvars();
    const auto e = common_degree(ambient.points(), "ambient set");
    const auto d = common_degree(face.points, "face");
    const auto& s_pts = ambient.points();

    MinkowskiSums sums(face.points);
    sums.prepare(bounds.k_max);
    const auto sr = coordinate_range(s_pts, n);
    const auto fr = coordinate_range(face.points, n);

    // T(k, z) = (kF + z) ∩ S; strata are the maximal nonempty T's.
    std::vector<std::map<IndexSet, LatticeVector>> per_k(bounds.k_max + 1);
#pragma omp parallel for schedule(dynamic)
    for (unsigned k = 1; k <= bounds.k_max; ++k) {
        LatticeVector lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = sr.lo[i] - static_cast<std::int64_t>(k) * fr.hi[i];
            hi[i] = sr.hi[i] - static_cast<std::int64_t>(k) * fr.lo[i];
        }
        const std::int64_t total = static_cast<std::int64_t>(e) - static_cast<std::int64_t>(k * d);
        auto& local = per_k[k];
        for_each_box_point(lo, hi, total, [&](const LatticeVector& z) {
            IndexSet t;
            for (std::size_t i = 0; i < s_pts.size(); ++i) {
                if (sums.contains_translate(k, s_pts[i], z)) t.push_back(i);
            }
            if (!t.empty()) local.emplace(std::move(t), z);  // keeps the first z per set
        });
    }

    std::map<IndexSet, std::vector<Placement>> family;
    for (unsigned k = 1; k <= bounds.k_max; ++k) {
        for (auto& [t, z] : per_k[k]) family[t].push_back({k, z});
    }

    const bool exact = (face.parent.is_full_simplex() && bounds.k_max >= std::max<std::uint64_t>(1, ceil_div(e, d))) ||
                       ambient.size() == 1;
    std::vector<Stratum> out;
    for (const auto& [t, placements] : family) {
        const bool maximal = std::none_of(family.begin(), family.end(), [&](const auto& other) {
            return other.first.size() > t.size() &&
                   std::includes(other.first.begin(), other.first.end(), t.begin(), t.end());
        });
        if (!maximal) continue;
        Stratum st;
        st.ambient = ambient;
        st.face = face;
        for (auto i : t) st.points.push_back(s_pts[i]);
        st.placements = placements;
        st.k_max = bounds.k_max;
        st.exact = exact;
        out.push_back(std::move(st));
    }
    for (auto& st : out) {
        const auto check = is_dominant_bounded(st, face.parent, bounds);
        st.dominant = check.verdict;
        st.violation = check.violation;
    }
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        return std::lexicographical_compare(a.points.begin(), a.points.end(), b.points.begin(), b.points.end(),
                                            GradedLexOrder{});
    });
    return out;
}

}  // namespace polycert
