#include "polycert/verify.hpp"

#include <algorithm>

#include "polycert/kernels.hpp"

namespace polycert::verify {

namespace {

const Limits verify_limits{};

Integer full_support_size(std::size_t nvars, Exponent degree) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), degree + nvars - 1, nvars - 1);
    return r;
}

}  // namespace

Form expand_power_times(const Form& base, unsigned m, const Form& tail) {
    Form acc = tail;
    for (unsigned i = 0; i < m; ++i) acc = kernels::convolve_reference(acc, base, verify_limits);
    return acc;
}

bool strictly_positive(const Form& f) {
    if (f.is_zero()) return false;
    if (Integer(static_cast<unsigned long>(f.size())) != full_support_size(f.nvars(), f.degree())) return false;
    for (const auto& t : f.terms()) {
        if (sgn(t.coeff) <= 0) return false;
    }
    return true;
}

bool nonnegative(const Form& f) {
    for (const auto& t : f.terms()) {
        if (sgn(t.coeff) < 0) return false;
    }
    return true;
}

bool polya_certificate(const Form& q, unsigned polya_exponent) {
    return strictly_positive(expand_power_times(Form::variable_sum(q.nvars()), polya_exponent, q));
}

bool orthant_refutation(const Form& q, std::span<const Rational> x) {
    if (x.size() != q.nvars()) return false;
    bool nonzero = false;
    for (const auto& v : x) {
        if (v < 0) return false;
        if (v != 0) nonzero = true;
    }
    return nonzero && eval(q, x) <= 0;
}

bool interior_refutation(const Form& q, std::span<const Rational> x) {
    if (x.size() != q.nvars()) return false;
    if (!std::all_of(x.begin(), x.end(), [](const Rational& v) { return v > 0; })) return false;
    return eval(q, x) <= 0;
}

bool power_exponent(const Form& f, const Form& g, unsigned m, CoefficientMode mode) {
    const Form prod = expand_power_times(f, m, g);
    return mode == CoefficientMode::strict ? strictly_positive(prod) : nonnegative(prod);
}

bool eventual_positivity(const EventualPositivityCertificate& cert) {
    if (cert.s == 0 || cert.window.size() != cert.s) return false;
    if (!strictly_positive(expand_power_times(cert.p, cert.s, Form::constant(cert.p.nvars(), 1)))) return false;
    Form cur = expand_power_times(cert.p, cert.m0, cert.q);
    for (unsigned i = 0; i < cert.s; ++i) {
        if (cert.window[i] != cert.m0 + i) return false;
        if (i > 0) cur = kernels::convolve_reference(cur, cert.p, verify_limits);
        if (!strictly_positive(cur)) return false;
    }
    return true;
}

bool handelman_exponent(const Form& p, const Form& q, unsigned m) {
    return m >= 1 && nonnegative(expand_power_times(p, m, q));
}

}  // namespace polycert::verify
