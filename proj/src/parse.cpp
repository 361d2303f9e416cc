#include "polycert/parse.hpp"

#include <cctype>
#include <limits>

#include "polycert/errors.hpp"

namespace polycert {

namespace {

class FormParser {
public:
    FormParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    Form parse() {
        if (nvars_ == 0) throw PreconditionError("nvars must be positive");
        skip_ws();
        if (at_end()) throw ParseError("empty form", pos_);
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = get() == '-';
        }
        parse_term(negative);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_);
            ++pos_;
            parse_term(c == '-');
        }
        check_homogeneous();
        const auto degree = static_cast<Exponent>(terms_.front().exponent.total());
        return Form::from_terms(nvars_, degree, std::move(terms_));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(peek())); }

    std::string digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint32_t small_uint(const char* what) {
        const std::size_t start = pos_;
        if (!at_digit()) throw ParseError(std::string("expected ") + what, pos_);
        const std::string s = digits();
        unsigned long long v = 0;
        for (char c : s) {
            v = v * 10 + static_cast<unsigned>(c - '0');
            if (v > std::numeric_limits<std::uint32_t>::max()) throw ParseError(std::string(what) + " too large", start);
        }
        return static_cast<std::uint32_t>(v);
    }

    void parse_term(bool negative) {
        skip_ws();
        const std::size_t start = pos_;
        Rational coeff = 1;
        bool seen = false;
        if (at_digit()) {
            Integer num(digits());
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                const std::size_t den_pos = pos_;
                if (!at_digit()) throw ParseError("expected denominator", pos_);
                den = Integer(digits());
                if (den == 0) throw ParseError("zero denominator", den_pos);
            }
            coeff = make_rational(num, den);
            seen = true;
        }
        MultiIndex w(nvars_);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != 'x') break;
            const std::size_t var_pos = pos_;
            ++pos_;
            const auto index = small_uint("variable index");
            if (index == 0 || index > nvars_) {
                throw ParseError("variable x" + std::to_string(index) + " outside x1..x" + std::to_string(nvars_),
                                 var_pos);
            }
            skip_ws();
            std::uint64_t e = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = small_uint("exponent");
            }
            const std::uint64_t total = std::uint64_t{w[index - 1]} + e;
            if (total > std::numeric_limits<Exponent>::max()) throw ParseError("exponent too large", var_pos);
            w[index - 1] = static_cast<Exponent>(total);
            seen = true;
        }
        if (!seen) {
            if (at_end()) throw ParseError("expected a term", pos_);
            throw ParseError(std::string("expected a term, found '") + peek() + "'", pos_);
        }
        if (negative) coeff = -coeff;
        positions_.push_back(start);
        terms_.push_back({std::move(w), std::move(coeff)});
    }

    void check_homogeneous() const {
        const auto d = terms_.front().exponent.total();
        std::size_t first_bad = 0;
        bool bad = false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].exponent.total() != d && !bad) {
                bad = true;
                first_bad = i;
            }
        }
        if (!bad) return;
        std::string degrees;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) degrees += ", ";
            degrees += std::to_string(terms_[i].exponent.total());
        }
        throw ParseError("inhomogeneous form: term degrees are [" + degrees + "]", positions_[first_bad]);
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
    std::vector<Term> terms_;
    std::vector<std::size_t> positions_;
};

std::string monomial_text(const MultiIndex& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'x' + std::to_string(i + 1);
        if (w[i] != 1) out += '^' + std::to_string(w[i]);
    }
    return out;
}

}  // namespace

Form parse_form(std::string_view text, std::size_t nvars) {
    return FormParser(text, nvars).parse();
}

std::string to_string(const Form& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const bool negative = t.coeff < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = abs(t.coeff);
        const std::string mono = monomial_text(t.exponent);
        if (mono.empty()) {
            out += to_display_string(magnitude);
        } else {
            if (magnitude != 1) out += to_display_string(magnitude) + ' ';
            out += mono;
        }
    }
    return out;
}

std::string to_string(const MultiIndex& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out + ")";
}

}  // namespace polycert
