#include <doctest.h>

#include "polycert/errors.hpp"
#include "polycert/handelman.hpp"
#include "polycert/parse.hpp"
#include "polycert/verify.hpp"

using namespace polycert;

namespace {
Form f2(const char* s) { return parse_form(s, 2); }
Form f3(const char* s) { return parse_form(s, 3); }
}  // namespace

TEST_CASE("x^2 - xy + y^2 times x + y is nonnegative at once") {
    const auto v = handelman_decide(f2("x1 + x2"), f2("x1^2 - x1 x2 + x2^2"));
    CHECK(v.status == HandelmanStatus::yes);
    CHECK(v.m == 1u);
    CHECK(v.trace.conditions == HandelmanStatus::yes);
}

TEST_CASE("interior refutations") {
    const auto v = handelman_decide(f2("x1 + x2"), f2("x1^2 - 3 x1 x2 + x2^2"));
    REQUIRE(v.status == HandelmanStatus::no);
    REQUIRE(v.failing);
    CHECK(v.failing->kind == FailingCondition::Kind::interior_positivity);
    CHECK(*v.failing->witness == std::vector<Rational>{make_rational(1, 2), make_rational(1, 2)});
    CHECK(*v.failing->value == make_rational(-1, 4));

    const auto sq = handelman_decide(f2("x1 + x2"), f2("x1^2 - 2 x1 x2 + x2^2"));
    REQUIRE(sq.status == HandelmanStatus::no);
    CHECK(*sq.failing->value == 0);
    CHECK(verify::interior_refutation(f2("x1^2 - 2 x1 x2 + x2^2"), *sq.failing->witness));
}

TEST_CASE("a monomial base cannot repair a negative coefficient") {
    const auto v = handelman_decide(f2("x1 x2"), f2("x1^2 - x1 x2 + x2^2"));
    REQUIRE(v.status == HandelmanStatus::no);
    CHECK(v.failing->kind == FailingCondition::Kind::monomial_base);
    CHECK(*v.failing->negative_exponent == MultiIndex{1, 1});
}

TEST_CASE("a face condition fails on a boundary square") {
    // Positive inside the orthant, but the z = 0 slice is (x - y)^2.
    const auto v = handelman_decide(f3("x1 + x2 + x3"), f3("x1^2 - 2 x1 x2 + x2^2 + x1 x3 + x2 x3 + x3^2"));
    REQUIRE(v.status == HandelmanStatus::no);
    CHECK(v.failing->kind == FailingCondition::Kind::face_condition);
    CHECK(v.failing->stratum == std::vector<MultiIndex>{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}});
    CHECK_FALSE(v.trace.children.empty());
}

TEST_CASE("nonnegative q passes with m = 1") {
    const auto v = handelman_decide(f3("x1 + x2 + x3"), f3("x1 x2 + x3^2"));
    CHECK(v.status == HandelmanStatus::yes);
    CHECK(v.m == 1u);
}

TEST_CASE("a larger exponent is found by direct search") {
    // Oracle: (x + y)^5 (x^2 - 3/2 xy + y^2) = x^7 + 7/2 x^6 y + 7/2 x^5 y^2 + 7/2 x^2 y^5 + 7/2 x y^6 + y^7.
    const auto p = f2("x1 + x2");
    const auto q = f2("x1^2 - 3/2 x1 x2 + x2^2");
    const auto v = handelman_decide(p, q);
    REQUIRE(v.status == HandelmanStatus::yes);
    CHECK(v.m == 5u);
    CHECK(verify::handelman_exponent(p, q, 5));
    CHECK_FALSE(verify::handelman_exponent(p, q, 4));
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(handelman_decide(f2("x1 - x2"), f2("x1")), PreconditionError);
    CHECK_THROWS_AS(handelman_decide(Form::zero(2, 1), f2("x1")), PreconditionError);
}

TEST_CASE("dominant pairs for fully supported p and q") {
    const auto pairs = dominant_strata_of_pair(f2("x1 + x2"), f2("x1^2 + x1 x2 + x2^2"));
    // improper face with E = Log(q), then one stratum per vertex face
    REQUIRE(pairs.size() == 3);
    for (const auto& pr : pairs) {
        CHECK(pr.stratum.dominant == Dominance::yes);
        if (pr.face.is_improper()) CHECK(pr.stratum.points.size() == 3);
        else CHECK(pr.stratum.points.size() == 1);
    }
}

TEST_CASE("dominant pairs for a gappy q and a monomial q") {
    const auto gappy = dominant_strata_of_pair(f2("x1 + x2"), f2("x1^3 + x2^3"));
    bool improper_found = false;
    for (const auto& pr : gappy) {
        if (pr.face.is_improper()) {
            improper_found = true;
            CHECK(pr.stratum.points == std::vector<MultiIndex>{{3, 0}, {0, 3}});
        }
    }
    CHECK(improper_found);
    const auto mono = dominant_strata_of_pair(f3("x1 + x2 + x3"), f3("x1 x2"));
    for (const auto& pr : mono) CHECK(pr.stratum.points == std::vector<MultiIndex>{{1, 1, 0}});
}
