#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace polycert {

/// Exact coefficients. gmpxx keeps mpq values canonical after arithmetic;
/// values built from strings must go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);

/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts "a", "-a" or "a/b" with b != 0.
Rational parse_fraction_string(std::string_view text);

/// Shortest readable form: "3" for integers, "-1/5" otherwise.
std::string to_display_string(const Rational& q);

std::vector<std::string> to_fraction_strings(const std::vector<Rational>& values);

}  // namespace polycert
