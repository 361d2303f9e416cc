#include "polycert/form.hpp"

#include <algorithm>
#include <limits>

#include "polycert/errors.hpp"
#include "polycert/kernels.hpp"
#include "polycert/simplex_index.hpp"

namespace polycert {

namespace {

void require_same_nvars(const Form& f, const Form& g) {
    if (f.nvars() != g.nvars()) {
        throw DegreeMismatch("forms live in different numbers of variables (" + std::to_string(f.nvars()) +
                             " vs " + std::to_string(g.nvars()) + ")");
    }
}

}  // namespace

Form Form::zero(std::size_t nvars, Exponent degree) {
    if (nvars == 0) throw PreconditionError("a form needs at least one variable");
    return Form(nvars, degree, {});
}

Form Form::constant(std::size_t nvars, const Rational& c) {
    return monomial(MultiIndex(nvars), c);
}

Form Form::monomial(const MultiIndex& w, const Rational& c) {
    if (w.size() == 0) throw PreconditionError("a form needs at least one variable");
    const auto degree = static_cast<Exponent>(w.total());
    if (c == 0) return Form(w.size(), degree, {});
    return Form(w.size(), degree, {Term{w, c}});
}

Form Form::variable(std::size_t nvars, std::size_t i) {
    MultiIndex w(nvars);
    w[i] = 1;
    return monomial(w, 1);
}

Form Form::variable_sum(std::size_t nvars) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < nvars; ++i) {
        MultiIndex w(nvars);
        w[i] = 1;
        terms.push_back({w, 1});
    }
    return from_terms(nvars, 1, std::move(terms));
}

Form Form::from_terms(std::size_t nvars, Exponent degree, std::vector<Term> terms) {
    if (nvars == 0) throw PreconditionError("a form needs at least one variable");
    for (const auto& t : terms) {
        if (t.exponent.size() != nvars) throw PreconditionError("exponent vector has wrong dimension");
        if (t.exponent.total() != degree) {
            throw DegreeMismatch("term of degree " + std::to_string(t.exponent.total()) + " in a form of degree " +
                                 std::to_string(degree));
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return GradedLexOrder{}(a.exponent, b.exponent); });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    return Form(nvars, degree, std::move(merged));
}

Rational Form::coefficient(const MultiIndex& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const MultiIndex& key) { return GradedLexOrder{}(t.exponent, key); });
    if (it != terms_.end() && it->exponent == w) return it->coeff;
    return 0;
}

Form add(const Form& f, const Form& g) {
    require_same_nvars(f, g);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree()) {
        throw DegreeMismatch("cannot add forms of degree " + std::to_string(f.degree()) + " and " +
                             std::to_string(g.degree()));
    }
    // Merge two sorted term lists.
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    auto a = f.terms().begin();
    auto b = g.terms().begin();
    const GradedLexOrder before;
    while (a != f.terms().end() || b != g.terms().end()) {
        if (b == g.terms().end() || (a != f.terms().end() && before(a->exponent, b->exponent))) {
            out.push_back(*a++);
        } else if (a == f.terms().end() || before(b->exponent, a->exponent)) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (c != 0) out.push_back({a->exponent, std::move(c)});
            ++a;
            ++b;
        }
    }
    return FormBuilder::adopt_canonical(f.nvars(), f.degree(), std::move(out));
}

Form negate(const Form& f) {
    return scale(f, -1);
}

Form sub(const Form& f, const Form& g) {
    return add(f, negate(g));
}

Form scale(const Form& f, const Rational& c) {
    if (c == 0) return Form::zero(f.nvars(), f.degree());
    std::vector<Term> out = f.terms();
    for (auto& t : out) t.coeff *= c;
    return FormBuilder::adopt_canonical(f.nvars(), f.degree(), std::move(out));
}

Form mul(const Form& f, const Form& g, const Limits& limits) {
    require_same_nvars(f, g);
    return kernels::convolve(f, g, limits);
}

Form pow(const Form& f, unsigned m, const Limits& limits) {
    Form result = Form::constant(f.nvars(), 1);
    for (unsigned i = 0; i < m; ++i) result = mul(result, f, limits);
    return result;
}

Rational eval(const Form& f, std::span<const Rational> point) {
    if (point.size() != f.nvars()) throw PreconditionError("evaluation point has wrong dimension");
    Rational sum = 0;
    Rational mono;
    Rational power;
    for (const auto& t : f.terms()) {
        mono = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const auto e = t.exponent[i];
            if (e == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
            mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
            mono *= power;
        }
        sum += mono;
    }
    return sum;
}

std::vector<Rational> ones(std::size_t nvars) {
    return std::vector<Rational>(nvars, Rational(1));
}

NewtonDiagram support(const Form& f) {
    std::vector<MultiIndex> pts;
    pts.reserve(f.size());
    for (const auto& t : f.terms()) pts.push_back(t.exponent);
    return NewtonDiagram(f.nvars(), std::move(pts));
}

bool has_strictly_positive_coefficients(const Form& f) {
    if (f.is_zero()) return false;
    if (f.size() != simplex_size(f.nvars(), f.degree())) return false;
    return std::all_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return t.coeff > 0; });
}

bool has_nonnegative_coefficients(const Form& f) {
    return std::all_of(f.terms().begin(), f.terms().end(), [](const Term& t) { return t.coeff >= 0; });
}

std::pair<MultiIndex, Form> strip_monomial_gcd(const Form& f) {
    if (f.is_zero()) throw PreconditionError("strip_monomial_gcd of the zero form");
    MultiIndex gamma(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        Exponent lo = std::numeric_limits<Exponent>::max();
        for (const auto& t : f.terms()) lo = std::min(lo, t.exponent[i]);
        gamma[i] = lo;
    }
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        MultiIndex w(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) w[i] = t.exponent[i] - gamma[i];
        out.push_back({std::move(w), t.coeff});
    }
    // Subtracting a fixed vector preserves the relative order of same-degree
    // exponents, so `out` is still canonical.
    const auto degree = static_cast<Exponent>(f.degree() - gamma.total());
    return {gamma, FormBuilder::adopt_canonical(f.nvars(), degree, std::move(out))};
}

Form permute_variables(const Form& f, std::span<const std::size_t> perm) {
    if (perm.size() != f.nvars()) throw PreconditionError("permutation has wrong length");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        MultiIndex w(f.nvars());
        for (std::size_t i = 0; i < f.nvars(); ++i) w[perm[i]] = t.exponent[i];
        out.push_back({std::move(w), t.coeff});
    }
    return Form::from_terms(f.nvars(), f.degree(), std::move(out));
}

std::vector<std::size_t> active_variables(const Form& f) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
        if (std::any_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return t.exponent[i] > 0; })) {
            out.push_back(i);
        }
    }
    return out;
}

Form project_to_variables(const Form& f, std::span<const std::size_t> keep) {
    if (keep.empty()) throw PreconditionError("projection must keep at least one variable");
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        MultiIndex w(keep.size());
        std::uint64_t kept_total = 0;
        for (std::size_t j = 0; j < keep.size(); ++j) {
            w[j] = t.exponent[keep[j]];
            kept_total += w[j];
        }
        if (kept_total != t.exponent.total()) {
            throw PreconditionError("projection drops a variable that occurs in the form");
        }
        out.push_back({std::move(w), t.coeff});
    }
    return Form::from_terms(keep.size(), f.degree(), std::move(out));
}

std::vector<Rational> lift_point(std::span<const Rational> point, std::span<const std::size_t> keep,
                                 std::size_t nvars, const Rational& fill) {
    std::vector<Rational> out(nvars, fill);
    for (std::size_t j = 0; j < keep.size(); ++j) out[keep[j]] = point[j];
    return out;
}

}  // namespace polycert
