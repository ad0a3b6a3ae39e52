#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "navt/mpoly.hpp"
#include "navt/scenario.hpp"

using namespace navt;

namespace {
MPoly form(const std::string& text, int nvars = 3) {
    return parse_form_expr(text, nvars);
}
}  // namespace

TEST_CASE("monomial helpers") {
    Monomial a{1, 2, 0}, b{0, 1, 3};
    CHECK(monomial_degree(a) == 3);
    CHECK(monomial_mul(a, b) == Monomial{1, 3, 3});
    CHECK(monomial_lcm(a, b) == Monomial{1, 2, 3});
    CHECK(monomial_divides(Monomial{0, 1, 0}, a));
    CHECK(!monomial_divides(b, a));
    CHECK(monomial_div(a, Monomial{1, 0, 0}) == Monomial{0, 2, 0});
}

TEST_CASE("monomial orders") {
    // grevlex on degree ties: smaller last exponent wins
    CHECK(monomial_greater({1, 1, 0}, {0, 0, 2}, MonOrder::grevlex));
    CHECK(monomial_greater({0, 2, 0}, {1, 0, 1}, MonOrder::grevlex));
    CHECK(monomial_greater({0, 0, 3}, {1, 1, 0}, MonOrder::grevlex));  // degree first
    // lex
    CHECK(monomial_greater({1, 0, 0}, {0, 5, 5}, MonOrder::lex));
    CHECK(monomial_greater({1, 1, 0}, {1, 0, 9}, MonOrder::lex));
    // elim_first: variable 0 dominates
    CHECK(monomial_greater({1, 0, 0}, {0, 9, 9}, MonOrder::elim_first));
    CHECK(monomial_greater({2, 0, 1}, {1, 7, 7}, MonOrder::elim_first));
}

TEST_CASE("arithmetic and degree") {
    MPoly q1 = form("X0*X1 - X2^2");
    CHECK(q1.total_degree() == 2);
    CHECK(q1.is_homogeneous());
    CHECK(!form("X0*X1 - X2^2 + X0").is_homogeneous());
    MPoly sum = q1 + q1.scaled(Rational(-1));
    CHECK(sum.is_zero());
    MPoly sq = q1 * q1;
    CHECK(sq.total_degree() == 4);
    CHECK(sq == form("X0^2*X1^2 - 2*X0*X1*X2^2 + X2^4"));
}

TEST_CASE("leading terms under grevlex") {
    MPoly q1 = form("X0*X1 - X2^2");
    CHECK(q1.leading_monomial(MonOrder::grevlex) == Monomial{1, 1, 0});
    MPoly q2 = form("X0*X2 - X1^2");
    CHECK(q2.leading_monomial(MonOrder::grevlex) == Monomial{0, 2, 0});
    CHECK(q2.leading_coeff(MonOrder::grevlex) == Rational(-1));
}

TEST_CASE("calculus and substitution") {
    MPoly q = form("X0*X1 - X2^2");
    CHECK(q.derivative(0) == form("X1"));
    CHECK(q.derivative(2) == form("-2*X2"));
    CHECK(q.substitute(0, Rational(1)) == form("X1 - X2^2"));
    MPoly affine = form("X1 - X2^2");  // inhomogeneous on purpose
    CHECK(affine.homogenize(0, 2) == form("X0*X1 - X2^2"));
}

TEST_CASE("drop and insert variables") {
    MPoly q = parse_form_expr("X0*X2 - X2^2", 3);
    MPoly dropped = q.drop_var(1);
    CHECK(dropped.nvars == 2);
    CHECK(dropped == parse_form_expr("X0*X1 - X1^2", 2));
    CHECK(dropped.insert_var(1) == q);
}

TEST_CASE("expression parser") {
    CHECK(form("3*X0^2 - 1/2*X1*X2") ==
          form("X0^2 + X0^2 + X0^2 - 1/2*X2*X1"));
    CHECK(form("(X0 + X1)^2") == form("X0^2 + 2*X0*X1 + X1^2"));
    CHECK(form("-X0^2") == form("0 - X0^2"));
    CHECK_THROWS_AS(form("X3"), ScenarioError);       // out of range
    CHECK_THROWS_AS(form("X0 + "), ScenarioError);    // dangling operator
    CHECK_THROWS_AS(form("X0 ^ -1"), ScenarioError);  // negative exponent
    CHECK_THROWS_AS(form("z"), ScenarioError);        // series var in a form

    auto c = parse_series_expr("1/2*z^2 - z + 3");
    CHECK(c == std::vector<Rational>{3, -1, Rational(1, 2)});
    CHECK(parse_series_expr("z*(z - 3)") == std::vector<Rational>{0, -3, 1});
}

TEST_CASE("to_string round-trips through the parser") {
    MPoly cases[] = {form("X0*X1 - X2^2"), form("-1/2*X0^3 + X1*X2^2"),
                     form("7"), MPoly::zero(3)};
    for (const auto& p : cases)
        CHECK(parse_form_expr(p.to_string(), 3) == p);
    auto coeffs = parse_series_expr("2*z^3 - 1/3*z + 5");
    CHECK(parse_series_expr(series_to_expr(coeffs)) == coeffs);
}

TEST_CASE("coefficient log norm of a form") {
    auto val = ValuationSpec::padic(2);
    MPoly q = form("4*X0^2 + 1/2*X1*X2");
    Rational w = q.max_coeff_log_norm(
        [&](const Rational& c) { return val.valuation(c); });
    CHECK(w == Rational(1));  // -v(1/2) = 1 beats -v(4) = -2
}
