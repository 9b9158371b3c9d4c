#include "doctest.h"

#include "latsum/parse.hpp"

using namespace latsum;

TEST_CASE("cubic surface text yields the expected support") {
    Fq f(3, 1);
    auto g = parse_poly("x1*x2^2 + x2*x3^2 + x1^2*x3", {"x1", "x2", "x3"}, f, 0);
    REQUIRE(g.terms.size() == 3);
    CHECK(g.terms.count({1, 2, 0}) == 1);
    CHECK(g.terms.count({0, 1, 2}) == 1);
    CHECK(g.terms.count({2, 0, 1}) == 1);
    for (const auto& [e, c] : g.terms) CHECK(c == f.one());
}

TEST_CASE("negative exponents only on torus variables") {
    Fq f(5, 1);
    auto g = parse_poly("x^-1 + y", {"x", "y"}, f, 1);
    CHECK(g.terms.count({-1, 0}) == 1);
    CHECK(g.terms.count({0, 1}) == 1);
    CHECK_THROWS_AS(parse_poly("y^-1", {"x", "y"}, f, 1), ParseError);
}

TEST_CASE("coefficients, whitespace and cancellation") {
    Fq f(7, 1);
    auto g = parse_poly("3*x^2- 2* x^2+ x ", {"x"}, f, 0);
    REQUIRE(g.terms.size() == 2);
    CHECK(g.terms.at({2}) == f.from_int(1));
    CHECK(g.terms.at({1}) == f.one());
    auto z = parse_poly("x - x", {"x"}, f, 0);
    CHECK(z.is_zero());
}

TEST_CASE("generator coefficients in an extension field") {
    Fq f(2, 2);  // F_4 with generator g
    auto a = parse_poly("g*x + g^2*y", {"x", "y"}, f, 0);
    CHECK(a.terms.at({1, 0}) == f.gen());
    CHECK(a.terms.at({0, 1}) == f.mul(f.gen(), f.gen()));
    auto b = parse_poly("(g + 1)*x", {"x", "y"}, f, 0);
    CHECK(b.terms.at({1, 0}) == f.add(f.gen(), f.one()));
}

TEST_CASE("syntax errors carry a position") {
    Fq f(3, 1);
    try {
        parse_poly("x1 + ", {"x1"}, f, 0);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 5);
    }
    CHECK_THROWS_AS(parse_poly("x1 * * x1", {"x1"}, f, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("z + 1", {"x", "y"}, f, 0), ParseError);
    CHECK_THROWS_AS(parse_poly("", {"x"}, f, 0), ParseError);
}

TEST_CASE("longest variable name wins") {
    Fq f(5, 1);
    auto g = parse_poly("x10 + x1", {"x1", "x10"}, f, 0);
    CHECK(g.terms.count({0, 1}) == 1);
    CHECK(g.terms.count({1, 0}) == 1);
}

TEST_CASE("print and reparse is idempotent") {
    Fq f(3, 1);
    std::vector<std::string> vars = {"x", "y"};
    auto g = parse_poly("2*x^3*y + y^2 + 1", vars, f, 0);
    std::string text = print_poly(g, vars, f);
    auto g2 = parse_poly(text, vars, f, 0);
    CHECK(g2.terms == g.terms);
    CHECK(print_poly(g2, vars, f) == text);

    Fq f4(2, 2);
    auto h = parse_poly("(g+1)*x^2 + g*x + 1", {"x"}, f4, 0);
    std::string ht = print_poly(h, {"x"}, f4);
    auto h2 = parse_poly(ht, {"x"}, f4, 0);
    CHECK(h2.terms == h.terms);
    CHECK(print_poly(h2, {"x"}, f4) == ht);

    CHECK(print_poly(Laurent(1), {"x"}, f) == "0");
}
