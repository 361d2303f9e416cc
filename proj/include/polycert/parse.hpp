#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "polycert/form.hpp"

namespace polycert {

/// Parses the flat form grammar
///
///   form     := [sign] term (sign term)*
///   term     := rational? (var ('^' uint)?)*      (at least one of the two)
///   var      := 'x' uint                           (1-based index)
///   rational := uint ('/' uint)?
///
/// Whitespace is insignificant. All terms must share one total degree.
Form parse_form(std::string_view text, std::size_t nvars);

/// Canonical text: terms in GradedLexOrder, unit coefficients elided,
/// "0" for the zero form. parse_form(to_string(f), f.nvars()) == f.
std::string to_string(const Form& f);

std::string to_string(const MultiIndex& w);

}  // namespace polycert
