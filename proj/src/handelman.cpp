#include "polycert/handelman.hpp"

#include <algorithm>

#include "polycert/errors.hpp"
#include "polycert/parse.hpp"
#include "polycert/verify.hpp"

namespace polycert {

const char* to_string(HandelmanStatus s) {
    switch (s) {
        case HandelmanStatus::yes: return "yes";
        case HandelmanStatus::no: return "no";
        case HandelmanStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(FailingCondition::Kind k) {
    switch (k) {
        case FailingCondition::Kind::interior_positivity: return "interior-positivity";
        case FailingCondition::Kind::face_condition: return "face-condition";
        case FailingCondition::Kind::monomial_base: return "monomial-base";
    }
    return "?";
}

namespace {

std::vector<RelativeFace> faces_of(const NewtonDiagram& logp, const HandelmanBudget& budget) {
    const auto d = logp.homogeneous_degree();
    if (d && *d > 0 && logp.is_full_simplex()) return simplex_faces(logp.nvars(), static_cast<Exponent>(*d));
    return enumerate_relative_faces(logp, budget.faces);
}

std::vector<Stratum> strata_for(const NewtonDiagram& logq, const RelativeFace& face, const HandelmanBudget& budget) {
    const auto d = face.points.front().total();
    const auto e = *logq.homogeneous_degree();
    if (face.parent.is_full_simplex() && logq.is_full_simplex() && face.zero_coordinates &&
        face.zero_coordinates->size() < logq.nvars() && e > 0 && !budget.k_max) {
        return closed_form_strata(logq.nvars(), static_cast<Exponent>(d), static_cast<Exponent>(e),
                                  *face.zero_coordinates);
    }
    const StratumBounds bounds = budget.k_max ? StratumBounds{*budget.k_max} : StratumBounds::for_degrees(d, e);
    return enumerate_strata_bounded(logq, face, bounds);
}

struct Reduced {
    Form p;
    Form q;
    std::vector<std::size_t> keep;
};

/// Divides out the monomial gcds and drops variables that no longer occur.
/// Coefficients of p^m q are unchanged up to a monomial shift.
Reduced reduce_pair(const Form& p, const Form& q) {
    auto p1 = strip_monomial_gcd(p).second;
    auto q1 = strip_monomial_gcd(q).second;
    std::vector<std::size_t> keep = active_variables(p1);
    for (auto v : active_variables(q1)) keep.push_back(v);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (keep.empty()) keep.push_back(0);
    return {project_to_variables(p1, keep), project_to_variables(q1, keep), std::move(keep)};
}

struct InteriorCheck {
    enum class Result { positive, refuted, unknown } result = Result::unknown;
    std::vector<Rational> witness;
    Rational value;
    std::string note;
};

/// Is q strictly positive on the open orthant? A Pólya certificate for the
/// stripped form proves it; a grid point is pushed into the interior
/// before it counts as a refutation.
InteriorCheck interior_positivity(const Form& q, const HandelmanBudget& budget) {
    InteriorCheck out;
    const std::size_t n = q.nvars();
    const Form g = strip_monomial_gcd(q).second;
    auto keep = active_variables(g);
    if (keep.empty()) {
        if (g.terms().front().coeff > 0) {
            out.result = InteriorCheck::Result::positive;
            out.note = "monomial with positive coefficient";
        } else {
            out.result = InteriorCheck::Result::refuted;
            out.witness = ones(n);
            out.value = eval(q, out.witness);
            out.note = "monomial with negative coefficient";
        }
        return out;
    }
    const Form reduced = project_to_variables(g, keep);
    const auto outcome = orthant_positivity(reduced, budget.polya);
    if (outcome.verdict == OrthantVerdict::certified_positive) {
        out.result = InteriorCheck::Result::positive;
        out.note = "Polya exponent " + std::to_string(*outcome.polya_exponent);
        return out;
    }
    if (outcome.verdict == OrthantVerdict::inconclusive) {
        out.note = "positivity inconclusive within budget";
        return out;
    }
    std::vector<Rational> x = *outcome.witness;
    const std::size_t k = x.size();
    const Rational center(1, static_cast<long>(k));
    Rational t(1, 2);
    for (int attempt = 0; attempt < 32; ++attempt, t /= 2) {
        const bool interior = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; });
        if (interior && eval(reduced, x) <= 0) {
            out.result = InteriorCheck::Result::refuted;
            out.witness = lift_point(x, keep, n, Rational(1));
            out.value = eval(q, out.witness);
            out.note = "value <= 0 at an interior point";
            return out;
        }
        // Move the boundary witness toward the barycenter.
        std::vector<Rational> y(k);
        for (std::size_t i = 0; i < k; ++i) y[i] = (1 - t) * (*outcome.witness)[i] + t * center;
        x = std::move(y);
    }
    out.note = "nonpositive only on the boundary";
    return out;
}

struct ConditionResult {
    HandelmanStatus status = HandelmanStatus::inconclusive;
    std::optional<FailingCondition> failing;
    HandelmanTrace trace;
};

ConditionResult decide_conditions(const Form& p, const Form& q, const HandelmanBudget& budget) {
    ConditionResult out;
    auto& trace = out.trace;
    trace.p = to_string(p);
    trace.q = to_string(q);
    trace.nvars = p.nvars();

    auto finish = [&](HandelmanStatus s) {
        out.status = s;
        trace.conditions = s;
        return out;
    };

    if (has_nonnegative_coefficients(q)) {
        trace.notes.push_back("q has nonnegative coefficients");
        return finish(HandelmanStatus::yes);
    }
    const NewtonDiagram logp = support(p);
    const NewtonDiagram logq = support(q);
    if (logp.size() == 1) {
        // p^m q is a shifted positive multiple of q.
        const auto neg = std::find_if(q.terms().begin(), q.terms().end(), [](const Term& t) { return t.coeff < 0; });
        FailingCondition fail;
        fail.kind = FailingCondition::Kind::monomial_base;
        fail.face = logp.points();
        fail.stratum = logq.points();
        fail.negative_exponent = neg->exponent;
        out.failing = std::move(fail);
        trace.notes.push_back("p is a monomial and q has a negative coefficient at " + to_string(neg->exponent));
        return finish(HandelmanStatus::no);
    }

    bool undecided = false;

    // q itself: p > 0 on the open orthant, so q(x) <= 0 there blocks every m.
    {
        const auto check = interior_positivity(q, budget);
        trace.notes.push_back("interior positivity of q: " + check.note);
        if (check.result == InteriorCheck::Result::refuted) {
            FailingCondition fail;
            fail.kind = FailingCondition::Kind::interior_positivity;
            fail.face = logp.points();
            fail.stratum = logq.points();
            fail.witness = check.witness;
            fail.value = check.value;
            out.failing = std::move(fail);
            return finish(HandelmanStatus::no);
        }
        if (check.result == InteriorCheck::Result::unknown) undecided = true;
    }

    std::vector<RelativeFace> faces;
    try {
        faces = faces_of(logp, budget);
    } catch (const ResourceError& e) {
        trace.notes.push_back(std::string("face enumeration skipped: ") + e.what());
        return finish(HandelmanStatus::inconclusive);
    }

    for (const auto& face : faces) {
        if (face.is_empty()) continue;
        const auto strata = strata_for(logq, face, budget);
        for (const auto& st : strata) {
            if (st.dominant == Dominance::no) continue;
            const bool decided = st.dominant == Dominance::yes && st.exact;
            const Form q_e = restrict_to_exponents(q, st.points);

            if (face.is_improper()) {
                if (st.points.size() == logq.size()) continue;  // q itself, handled above
                const auto check = interior_positivity(q_e, budget);
                trace.notes.push_back("interior positivity of q_E on a stratum of size " +
                                      std::to_string(st.points.size()) + ": " + check.note);
                if (check.result == InteriorCheck::Result::refuted && decided) {
                    FailingCondition fail;
                    fail.kind = FailingCondition::Kind::interior_positivity;
                    fail.face = face.points;
                    fail.stratum = st.points;
                    fail.witness = check.witness;
                    fail.value = check.value;
                    out.failing = std::move(fail);
                    return finish(HandelmanStatus::no);
                }
                if (check.result != InteriorCheck::Result::positive) undecided = true;
                continue;
            }

            if (has_nonnegative_coefficients(q_e)) continue;
            const Form p_f = restrict_to_exponents(p, face.points);
            auto reduced = reduce_pair(p_f, q_e);
            auto child = decide_conditions(reduced.p, reduced.q, budget);
            child.trace.variables = reduced.keep;
            const auto child_status = child.status;
            trace.children.push_back(std::move(child.trace));
            if (child_status == HandelmanStatus::no) {
                if (decided) {
                    FailingCondition fail;
                    fail.kind = FailingCondition::Kind::face_condition;
                    fail.face = face.points;
                    fail.stratum = st.points;
                    out.failing = std::move(fail);
                    trace.notes.push_back("face condition fails on a dominant stratum");
                    return finish(HandelmanStatus::no);
                }
                trace.notes.push_back("face condition fails on a stratum whose dominance is undecided");
                undecided = true;
            } else if (child_status == HandelmanStatus::inconclusive) {
                undecided = true;
            }
        }
    }
    return finish(undecided ? HandelmanStatus::inconclusive : HandelmanStatus::yes);
}

}  // namespace

std::vector<FaceStratumPair> dominant_strata_of_pair(const Form& p, const Form& q, const HandelmanBudget& budget) {
    if (p.is_zero()) throw PreconditionError("dominant_strata_of_pair needs p nonzero");
    if (p.nvars() != q.nvars()) throw DegreeMismatch("p and q live in different numbers of variables");
    std::vector<FaceStratumPair> out;
    if (q.is_zero()) return out;
    const NewtonDiagram logq = support(q);
    for (const auto& face : faces_of(support(p), budget)) {
        if (face.is_empty()) continue;
        for (auto& st : strata_for(logq, face, budget)) {
            if (st.dominant == Dominance::no) continue;
            out.push_back({face, std::move(st)});
        }
    }
    return out;
}

HandelmanVerdict handelman_decide(const Form& p, const Form& q, const HandelmanBudget& budget) {
    if (p.nvars() != q.nvars()) throw DegreeMismatch("p and q live in different numbers of variables");
    if (p.is_zero() || !has_nonnegative_coefficients(p)) {
        throw PreconditionError("handelman_decide needs p nonzero with nonnegative coefficients");
    }
    HandelmanVerdict verdict;
    auto cond = decide_conditions(p, q, budget);
    verdict.trace = std::move(cond.trace);
    for (std::size_t i = 0; i < p.nvars(); ++i) verdict.trace.variables.push_back(i);
    if (cond.status == HandelmanStatus::no) {
        verdict.status = HandelmanStatus::no;
        verdict.failing = std::move(cond.failing);
        return verdict;
    }
    // The conditions guarantee some m exists; find the least one directly.
    Form cur = q;
    for (unsigned m = 1; m <= budget.m_max; ++m) {
        cur = mul(cur, p, budget.limits);
        if (has_nonnegative_coefficients(cur)) {
            if (!verify::handelman_exponent(p, q, m)) throw Error("internal error: exponent failed re-verification");
            verdict.status = HandelmanStatus::yes;
            verdict.m = m;
            return verdict;
        }
    }
    verdict.trace.notes.push_back(cond.status == HandelmanStatus::yes
                                      ? "conditions hold but no exponent found up to m_max"
                                      : "conditions undecided and no exponent found up to m_max");
    verdict.status = HandelmanStatus::inconclusive;
    return verdict;
}

}  // namespace polycert
