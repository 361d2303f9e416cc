#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "polycert/multi_index.hpp"
#include "polycert/newton_diagram.hpp"
#include "polycert/rational.hpp"

namespace polycert {

/// Resource limits shared by the arithmetic kernels.
struct Limits {
    std::size_t max_terms = 1'000'000;
};

struct Term {
    MultiIndex exponent;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Homogeneous polynomial with exact rational coefficients.
///
/// Terms are stored sorted in GradedLexOrder with no zero coefficients, so
/// two forms are equal iff their term vectors are equal. The zero form keeps
/// a degree tag but is compatible with any degree under addition.
class Form {
public:
    Form() = default;

    static Form zero(std::size_t nvars, Exponent degree);
    static Form constant(std::size_t nvars, const Rational& c);
    static Form monomial(const MultiIndex& w, const Rational& c);
    /// x_i (0-based index).
    static Form variable(std::size_t nvars, std::size_t i);
    /// x_1 + ... + x_n
    static Form variable_sum(std::size_t nvars);

    /// Merges duplicate exponents, drops zeros and sorts. Throws
    /// DegreeMismatch if some exponent has total != degree.
    static Form from_terms(std::size_t nvars, Exponent degree, std::vector<Term> terms);

    std::size_t nvars() const noexcept { return nvars_; }
    Exponent degree() const noexcept { return degree_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    Rational coefficient(const MultiIndex& w) const;

    friend bool operator==(const Form& a, const Form& b) {
        if (a.nvars_ != b.nvars_) return false;
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    friend class FormBuilder;
    Form(std::size_t nvars, Exponent degree, std::vector<Term> terms)
        : nvars_(nvars), degree_(degree), terms_(std::move(terms)) {}

    std::size_t nvars_ = 1;
    Exponent degree_ = 0;
    std::vector<Term> terms_;
};

/// Trusted construction path for kernels that already produce canonical,
/// zero-free, sorted term vectors.
class FormBuilder {
public:
    static Form adopt_canonical(std::size_t nvars, Exponent degree, std::vector<Term> terms) {
        return Form(nvars, degree, std::move(terms));
    }
};

Form add(const Form& f, const Form& g);
Form sub(const Form& f, const Form& g);
Form negate(const Form& f);
Form scale(const Form& f, const Rational& c);

Form mul(const Form& f, const Form& g, const Limits& limits = {});
/// f^m by iterated multiplication.
Form pow(const Form& f, unsigned m, const Limits& limits = {});

Rational eval(const Form& f, std::span<const Rational> point);
/// The point (1, ..., 1).
std::vector<Rational> ones(std::size_t nvars);

NewtonDiagram support(const Form& f);

/// Every monomial of degree d present with a positive coefficient.
bool has_strictly_positive_coefficients(const Form& f);
/// No stored coefficient is negative; gaps allowed.
bool has_nonnegative_coefficients(const Form& f);

template <typename Range>
Form restrict_to_exponents(const Form& f, const Range& exponents) {
    NewtonDiagram keep(f.nvars(), std::vector<MultiIndex>(std::begin(exponents), std::end(exponents)));
    std::vector<Term> kept;
    for (const auto& t : f.terms()) {
        if (keep.contains(t.exponent)) kept.push_back(t);
    }
    return FormBuilder::adopt_canonical(f.nvars(), f.degree(), std::move(kept));
}

/// f = x^gamma * g with gamma_i = min over the support of w_i.
std::pair<MultiIndex, Form> strip_monomial_gcd(const Form& f);

/// Relabels variables: x_i becomes x_{perm[i]}.
Form permute_variables(const Form& f, std::span<const std::size_t> perm);

/// Indices of variables with a nonzero exponent somewhere in the support.
std::vector<std::size_t> active_variables(const Form& f);

/// Rewrites f in the listed variables only; every other exponent must be 0.
Form project_to_variables(const Form& f, std::span<const std::size_t> keep);

/// Inverse of project_to_variables for points: coordinates outside `keep`
/// are filled with `fill`.
std::vector<Rational> lift_point(std::span<const Rational> point, std::span<const std::size_t> keep,
                                 std::size_t nvars, const Rational& fill);

}  // namespace polycert
