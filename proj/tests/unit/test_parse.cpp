#include <doctest.h>

#include "polycert/errors.hpp"
#include "polycert/parse.hpp"

using namespace polycert;

TEST_CASE("parses the flat grammar") {
    const auto f = parse_form("x1^2 - x1 x2 + x2^2", 2);
    CHECK(f.degree() == 2);
    CHECK(f.coefficient({1, 1}) == -1);
    CHECK(parse_form("  -3/4x1x2+x2^2 ", 2).coefficient({1, 1}) == make_rational(-3, 4));
    CHECK(parse_form("2", 3) == Form::constant(3, 2));
    CHECK(parse_form("x1 x1", 1) == parse_form("x1^2", 1));
    CHECK(parse_form("0", 2).is_zero());
}

TEST_CASE("prints canonically") {
    CHECK(to_string(parse_form("x2^2 + x1^2 - x2 x1", 2)) == "x1^2 - x1 x2 + x2^2");
    CHECK(to_string(parse_form("-x1 + 1/5 x2", 2)) == "-x1 + 1/5 x2");
    CHECK(to_string(Form::zero(2, 3)) == "0");
    CHECK(to_string(Form::constant(2, -7)) == "-7");
    CHECK(to_string(MultiIndex{2, 0, 1}) == "(2,0,1)");
}

TEST_CASE("print then parse is the identity") {
    for (const auto* s : {"x1^4 + 4 x1^3 x2 - 1/5 x1^2 x2^2 + 4 x1 x2^3 + x2^4", "-x1 x2", "3", "x1 - 2/3 x2"}) {
        const auto f = parse_form(s, 2);
        CHECK(parse_form(to_string(f), 2) == f);
    }
}

TEST_CASE("rejects malformed input with a position") {
    auto position_of = [](const char* text, std::size_t n) -> std::size_t {
        try {
            parse_form(text, n);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    CHECK(position_of("x1 +", 2) == 4);
    CHECK(position_of("x3", 2) == 0);
    CHECK(position_of("x0", 2) == 0);
    CHECK(position_of("x1 ^", 2) != 999);
    CHECK(position_of("1/0 x1", 2) != 999);
    CHECK(position_of("x1 y", 2) != 999);
    CHECK(position_of("", 2) != 999);
    CHECK_THROWS_AS(parse_form("x1^2 + x2", 2), Error);
}
