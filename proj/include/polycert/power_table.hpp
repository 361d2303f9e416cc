#pragma once

#include <vector>

#include "polycert/form.hpp"

namespace polycert {

/// Memo of base^0, base^1, ... built by iterated multiplication. Confined to
/// one caller; not safe for concurrent growth.
class PowerTable {
public:
    explicit PowerTable(Form base, Limits limits = {});

    const Form& base() const noexcept { return powers_[1]; }
    const Form& power(unsigned m);
    unsigned computed() const noexcept { return static_cast<unsigned>(powers_.size() - 1); }

private:
    Limits limits_;
    std::vector<Form> powers_;
};

}  // namespace polycert
