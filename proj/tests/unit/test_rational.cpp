#include <doctest.h>

#include "polycert/errors.hpp"
#include "polycert/rational.hpp"

using namespace polycert;

TEST_CASE("rationals are canonical after construction") {
    const auto r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("fraction strings always carry a denominator") {
    CHECK(to_fraction_string(Rational(3)) == "3/1");
    CHECK(to_fraction_string(make_rational(-1, 5)) == "-1/5");
    CHECK(to_fraction_string(Rational(0)) == "0/1");
    CHECK(to_display_string(Rational(3)) == "3");
    CHECK(to_display_string(make_rational(-1, 5)) == "-1/5");
}

TEST_CASE("fraction strings parse back") {
    for (const auto* s : {"0/1", "7/1", "-31/5", "123456789012345678901234567891/7"}) {
        CHECK(to_fraction_string(parse_fraction_string(s)) == s);
    }
    CHECK(parse_fraction_string("4/6") == make_rational(2, 3));
    CHECK(parse_fraction_string("-2") == Rational(-2));
    CHECK_THROWS(parse_fraction_string("1/0"));
    CHECK_THROWS(parse_fraction_string("abc"));
    CHECK_THROWS(parse_fraction_string(""));
}
