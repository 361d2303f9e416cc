#include "polycert/positivity.hpp"

#include "polycert/errors.hpp"
#include "polycert/kernels.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert {

const char* to_string(OrthantVerdict v) {
    switch (v) {
        case OrthantVerdict::certified_positive: return "certified-positive";
        case OrthantVerdict::refuted: return "refuted";
        case OrthantVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(CoefficientMode m) {
    return m == CoefficientMode::strict ? "strict" : "nonneg";
}

const char* to_string(CertifyStatus s) {
    switch (s) {
        case CertifyStatus::certified: return "certified";
        case CertifyStatus::refuted: return "refuted";
        case CertifyStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

OrthantPositivityOutcome orthant_positivity(const Form& q, const PolyaBudget& budget) {
    if (q.is_zero()) throw PreconditionError("orthant positivity of the zero form");
    OrthantPositivityOutcome out;
    const std::size_t n = q.nvars();
    const Form sum = Form::variable_sum(n);
    Form cur = q;
    const unsigned steps = std::max(budget.n_max, budget.grid_depth);
    // Certificate and refutation searches alternate so that whichever is
    // cheap finishes first; they can never both succeed.
    for (unsigned t = 0; t <= steps; ++t) {
        if (t <= budget.n_max) {
            if (t > 0) cur = mul(cur, sum);
            out.exponents_tried = t + 1;
            if (has_strictly_positive_coefficients(cur)) {
                out.verdict = OrthantVerdict::certified_positive;
                out.polya_exponent = t;
                return out;
            }
        }
        if (t <= budget.grid_depth && t < 31) {
            const Exponent denominator = Exponent{1} << t;
            const auto cells = simplex_size(n, denominator);
            if (cells > budget.max_grid_points) continue;
            ++out.grid_levels_scanned;
            out.grid_points_evaluated += cells;
            if (auto hit = kernels::first_nonpositive_grid_point(q, denominator, t > 0)) {
                std::vector<Rational> x;
                x.reserve(n);
                for (const auto& c : hit->point) x.push_back(make_rational(c, denominator));
                out.witness_value = eval(q, x);
                out.witness = std::move(x);
                out.verdict = OrthantVerdict::refuted;
                return out;
            }
        }
    }
    return out;
}

PositiveSplit positive_split(const Form& g, const SplitBudget& budget) {
    const auto g_outcome = orthant_positivity(g, budget.polya);
    if (g_outcome.verdict != OrthantVerdict::certified_positive) {
        throw PreconditionError("positive_split needs a form certified positive on the punctured orthant");
    }
    const std::size_t n = g.nvars();
    const Form base = pow(Form::variable_sum(n), g.degree());
    const auto full = simplex_size(n, g.degree());
    Rational c(1, 2);
    for (unsigned i = 0; i <= budget.max_halvings; ++i, c /= 2) {
        Form g_prime = scale(base, c);
        Form h = sub(g, g_prime);
        if (h.size() != full) continue;
        auto outcome = orthant_positivity(h, budget.polya);
        if (outcome.verdict == OrthantVerdict::certified_positive) {
            return {c, std::move(g_prime), std::move(h), std::move(outcome), i};
        }
    }
    throw ResourceError("positive_split: no admissible c within " + std::to_string(budget.max_halvings) +
                        " halvings");
}

PowerSearchResult find_power_exponent(const Form& f, const Form& g, CoefficientMode mode, unsigned m_max,
                                      unsigned start, const Limits& limits) {
    if (f.degree() == 0 || !has_strictly_positive_coefficients(f)) {
        throw PreconditionError("find_power_exponent needs f nonconstant with strictly positive coefficients");
    }
    if (g.is_zero()) throw PreconditionError("find_power_exponent needs g nonzero");
    if (f.nvars() != g.nvars()) throw DegreeMismatch("f and g live in different numbers of variables");

    PowerSearchResult out;
    out.next_m = start;
    // f(1) > 0, so f^m g (1) = f(1)^m g(1). A form with nonnegative
    // coefficients that is <= 0 at (1,...,1) is zero, and g != 0.
    const auto at_ones = ones(g.nvars());
    if (eval(g, at_ones) <= 0) {
        out.provably_never = true;
        out.refutation_point = at_ones;
        return out;
    }
    if (start > m_max) return out;
    Form cur = mul(pow(f, start, limits), g, limits);
    for (unsigned m = start; m <= m_max; ++m) {
        if (m > start) cur = mul(cur, f, limits);
        const bool ok = mode == CoefficientMode::strict ? has_strictly_positive_coefficients(cur)
                                                        : has_nonnegative_coefficients(cur);
        if (ok) {
            out.exponent = m;
            out.next_m = m + 1;
            return out;
        }
    }
    out.next_m = m_max + 1;
    return out;
}

TheoremConditionsReport check_theorem_conditions(const Form& p, unsigned search_cap, const Limits& limits) {
    if (p.degree() == 0) throw PreconditionError("check_theorem_conditions needs a nonconstant form");
    TheoremConditionsReport report;
    const auto at_ones = ones(p.nvars());
    report.value_at_ones = eval(p, at_ones);
    if (report.value_at_ones == 0) {
        report.provably_never = true;
        report.refutation =
            "p(1,...,1) = 0, so every power vanishes at (1,...,1) and none has strictly positive coefficients";
        return report;
    }
    if (report.value_at_ones < 0) {
        // A strictly positive power makes p nonvanishing on the orthant minus
        // the origin, hence of constant sign there; p(1) < 0 fixes it negative.
        report.provably_never = true;
        report.refutation =
            "p(1,...,1) < 0: odd powers are negative at (1,...,1) and p cannot be positive anywhere on the orthant";
        return report;
    }
    Form cur = Form::constant(p.nvars(), 1);
    for (unsigned m = 1; m <= search_cap; ++m) {
        cur = mul(cur, p, limits);
        report.searched_up_to = m;
        if (has_strictly_positive_coefficients(cur)) {
            if (!report.least_power) report.least_power = m;
            if (m % 2 == 1 && !report.least_odd_power) report.least_odd_power = m;
        }
        if (report.least_power && report.least_odd_power) break;
    }
    if (report.least_power) report.positive_point = std::make_pair(*report.least_power, at_ones);
    return report;
}

CertifyOutcome certify_eventual_positivity(const Form& p, const Form& q, const CertifyBudget& budget) {
    if (p.nvars() != q.nvars()) throw DegreeMismatch("p and q live in different numbers of variables");
    if (q.is_zero()) throw PreconditionError("certify_eventual_positivity needs q nonzero");
    if (p.degree() == 0) throw PreconditionError("certify_eventual_positivity needs p nonconstant");

    CertifyOutcome out;
    out.q_outcome = orthant_positivity(q, budget.polya);
    const auto at_ones = ones(p.nvars());
    const Rational p1 = eval(p, at_ones);
    const Rational q1 = eval(q, at_ones);
    // p^m q (1) = p(1)^m q(1) is <= 0 for infinitely many m in these cases,
    // while a form with strictly positive coefficients is > 0 there.
    out.definitive_at_ones = p1 <= 0 || q1 <= 0;

    if (out.q_outcome.verdict == OrthantVerdict::refuted) {
        out.status = CertifyStatus::refuted;
        out.refutation_point = out.q_outcome.witness;
        out.reason = "q is not strictly positive on the punctured orthant";
        return out;
    }
    if (out.definitive_at_ones) {
        out.status = CertifyStatus::refuted;
        out.refutation_point = at_ones;
        out.reason = p1 <= 0 ? "p(1,...,1) <= 0" : "q(1,...,1) <= 0";
        out.p_conditions = check_theorem_conditions(p, budget.s_cap, budget.limits);
        return out;
    }
    if (out.q_outcome.verdict != OrthantVerdict::certified_positive) {
        out.reason = "q not certified positive within the Polya budget";
        return out;
    }
    out.p_conditions = check_theorem_conditions(p, budget.s_cap, budget.limits);
    if (!out.p_conditions->least_power) {
        out.reason = "no strictly positive power of p up to the s cap";
        return out;
    }
    const unsigned s = *out.p_conditions->least_power;

    Form cur = q;
    unsigned run = 0;
    const unsigned last = budget.m_max + s - 1;
    for (unsigned m = 0; m <= last; ++m) {
        if (m > 0) cur = mul(cur, p, budget.limits);
        run = has_strictly_positive_coefficients(cur) ? run + 1 : 0;
        if (run == s) {
            EventualPositivityCertificate cert{p, q, s, m + 1 - s, {}};
            for (unsigned i = 0; i < s; ++i) cert.window.push_back(cert.m0 + i);
            out.certificate = std::move(cert);
            out.status = CertifyStatus::certified;
            return out;
        }
    }
    out.next_m0 = budget.m_max + 1;
    out.reason = "no window of s consecutive strictly positive products up to m_max";
    return out;
}

}  // namespace polycert
