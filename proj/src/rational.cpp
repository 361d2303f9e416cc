#include "polycert/rational.hpp"

#include "polycert/errors.hpp"

namespace polycert {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction_string(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) return false;
        for (char c : s) {
            if (c < '0' || c > '9') return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw Error("malformed rational '" + std::string(text) + "'");
    }
    std::string num_str(num);
    if (num_str.front() == '+') num_str.erase(0, 1);
    return make_rational(Integer(num_str), Integer(std::string(den)));
}

std::string to_display_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_fraction_string(q);
}

std::vector<std::string> to_fraction_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_fraction_string(v));
    return out;
}

}  // namespace polycert
