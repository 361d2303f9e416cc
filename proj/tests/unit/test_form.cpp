#include <doctest.h>

#include "polycert/errors.hpp"
#include "polycert/form.hpp"
#include "polycert/parse.hpp"
#include "polycert/power_table.hpp"

using namespace polycert;

namespace {
Form f2(const char* s) { return parse_form(s, 2); }
Form f3(const char* s) { return parse_form(s, 3); }
}  // namespace

TEST_CASE("from_terms merges, drops zeros and sorts") {
    const auto f = Form::from_terms(2, 2, {{{0, 2}, 1}, {{2, 0}, 3}, {{0, 2}, -1}, {{1, 1}, 2}});
    REQUIRE(f.size() == 2);
    CHECK(f.terms()[0].exponent == MultiIndex{2, 0});
    CHECK(f.terms()[1].exponent == MultiIndex{1, 1});
    CHECK(f.coefficient({0, 2}) == 0);
    CHECK_THROWS_AS(Form::from_terms(2, 2, {{{1, 0}, 1}}), DegreeMismatch);
}

TEST_CASE("zero forms are equal whatever their degree tag") {
    CHECK(Form::zero(2, 3) == Form::zero(2, 0));
    CHECK_FALSE(Form::zero(2, 3) == Form::zero(3, 3));
    CHECK(add(Form::zero(2, 0), f2("x1")) == f2("x1"));
    CHECK(sub(f2("x1 + x2"), f2("x1 + x2")).is_zero());
}

TEST_CASE("adding forms of different degrees fails") {
    CHECK_THROWS_AS(add(f2("x1"), f2("x1^2")), DegreeMismatch);
}

TEST_CASE("products and powers") {
    CHECK(mul(f2("x1 + x2"), f2("x1^2 - x1 x2 + x2^2")) == f2("x1^3 + x2^3"));
    CHECK(pow(f2("x1 + x2"), 3) == f2("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3"));
    CHECK(pow(f2("x1 - x2"), 0) == Form::constant(2, 1));
    CHECK(mul(Form::zero(2, 1), f2("x1")).is_zero());
    CHECK(scale(f2("x1 + x2"), make_rational(1, 2)) == f2("1/2 x1 + 1/2 x2"));
    CHECK(negate(f2("x1 - x2")) == f2("x2 - x1"));
}

TEST_CASE("term budget is enforced") {
    const auto s = Form::variable_sum(4);
    CHECK_THROWS_AS(pow(s, 10, Limits{100}), ResourceError);
}

TEST_CASE("exact evaluation") {
    const auto q = f2("x1^2 - 3 x1 x2 + x2^2");
    const std::vector<Rational> half{make_rational(1, 2), make_rational(1, 2)};
    CHECK(eval(q, half) == make_rational(-1, 4));
    CHECK(eval(q, ones(2)) == -1);
}

TEST_CASE("strict positivity needs full support") {
    CHECK(has_strictly_positive_coefficients(f2("x1^2 + x1 x2 + x2^2")));
    CHECK_FALSE(has_strictly_positive_coefficients(f2("x1^2 + x2^2")));
    CHECK(has_nonnegative_coefficients(f2("x1^2 + x2^2")));
    CHECK_FALSE(has_nonnegative_coefficients(f2("x1^2 - x1 x2")));
    CHECK(has_nonnegative_coefficients(Form::zero(2, 2)));
    CHECK_FALSE(has_strictly_positive_coefficients(Form::zero(2, 2)));
    CHECK(has_strictly_positive_coefficients(Form::constant(3, 2)));
}

TEST_CASE("monomial gcd is stripped") {
    const auto [gamma, g] = strip_monomial_gcd(f3("x1^2 x2 x3 + x1 x2^2 x3"));
    CHECK(gamma == MultiIndex{1, 1, 1});
    CHECK(g == f3("x1 + x2"));
}

TEST_CASE("variables are permuted, projected and lifted") {
    const std::vector<std::size_t> perm{2, 0, 1};
    CHECK(permute_variables(f3("x1^2 + x2 x3"), perm) == f3("x3^2 + x1 x2"));
    const auto f = f3("x1 x3 + x3^2");
    CHECK(active_variables(f) == std::vector<std::size_t>{0, 2});
    const std::vector<std::size_t> keep{0, 2};
    CHECK(project_to_variables(f, keep) == f2("x1 x2 + x2^2"));
    const std::vector<std::size_t> only_first{0};
    CHECK_THROWS(project_to_variables(f, only_first));
    const std::vector<Rational> x{make_rational(1, 3), make_rational(2, 3)};
    CHECK(lift_point(x, keep, 3, Rational(1)) == std::vector<Rational>{make_rational(1, 3), 1, make_rational(2, 3)});
}

TEST_CASE("restriction keeps the listed exponents only") {
    const auto f = f2("x1^2 - x1 x2 + 4 x2^2");
    const std::vector<MultiIndex> e{{2, 0}, {0, 2}};
    CHECK(restrict_to_exponents(f, e) == f2("x1^2 + 4 x2^2"));
}

TEST_CASE("power table memoizes") {
    PowerTable t(f2("x1 + x2"));
    CHECK(t.power(4) == pow(f2("x1 + x2"), 4));
    CHECK(t.computed() == 4);
    CHECK(t.power(2) == f2("x1^2 + 2 x1 x2 + x2^2"));
    CHECK(t.computed() == 4);
}
