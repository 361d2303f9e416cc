#pragma once

#include <span>

#include "polycert/form.hpp"
#include "polycert/positivity.hpp"

// Re-checks of certificates by direct expansion. Everything here uses the
// serial reference convolution and its own coefficient tests so that it
// shares no code path with the searches that produced the certificates.
namespace polycert::verify {

Form expand_power_times(const Form& base, unsigned m, const Form& tail);

bool strictly_positive(const Form& f);
bool nonnegative(const Form& f);

/// (x_1 + ... + x_n)^N q has strictly positive coefficients.
bool polya_certificate(const Form& q, unsigned polya_exponent);

/// x is a nonzero point of the orthant with q(x) <= 0.
bool orthant_refutation(const Form& q, std::span<const Rational> x);

/// x has all coordinates > 0 and q(x) <= 0.
bool interior_refutation(const Form& q, std::span<const Rational> x);

bool power_exponent(const Form& f, const Form& g, unsigned m, CoefficientMode mode);

/// p^s strictly positive and p^m q strictly positive over the window.
bool eventual_positivity(const EventualPositivityCertificate& cert);

/// p^m q has nonnegative coefficients.
bool handelman_exponent(const Form& p, const Form& q, unsigned m);

}  // namespace polycert::verify
