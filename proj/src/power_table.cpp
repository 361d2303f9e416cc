#include "polycert/power_table.hpp"

namespace polycert {

PowerTable::PowerTable(Form base, Limits limits) : limits_(limits) {
    powers_.push_back(Form::constant(base.nvars(), 1));
    powers_.push_back(std::move(base));
}

const Form& PowerTable::power(unsigned m) {
    while (powers_.size() <= m) {
        powers_.push_back(mul(powers_.back(), powers_[1], limits_));
    }
    return powers_[m];
}

}  // namespace polycert
