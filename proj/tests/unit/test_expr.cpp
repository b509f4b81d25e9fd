#include "qtri/expr.hpp"
#include "qtri/random.hpp"

#include <doctest.h>

using namespace qtri;

TEST_SUITE("expr") {

TEST_CASE("parse examples") {
    TriangularAlgebra t(2, false), u(2, true);
    CHECK(parse("a[2,2]*a[1,2] - q*a[1,2]*a[2,2]", t).is_zero());
    CHECK(parse("1", t) == t.one());
    CHECK(parse("t*det - 1", u).is_zero());
    CHECK(parse("z", u) == u.a(1, 1) * u.a(2, 2, -1));
    CHECK(parse("  ( 1/2 + 3/4*i ) * q^-2 ", t) ==
          t.scalar(ScalarQ(GaussianRational(mpq_class(1, 2), mpq_class(3, 4)), -2)));
    CHECK(parse("-a[1,2]^2", t) == -(t.a(1, 2) * t.a(1, 2)));
    CHECK(parse("a[1,1]^-1", u) == u.a(1, 1, -1));
    CHECK(parse("2/4", t) == t.scalar(ScalarQ(GaussianRational(mpq_class(1, 2)))));
}

TEST_CASE("parse errors") {
    TriangularAlgebra t(2, false);
    CHECK_THROWS_AS(parse("a[1,2", t), ParseError);
    CHECK_THROWS_AS(parse("2 a[1,1]", t), ParseError);
    CHECK_THROWS_AS(parse("1/0", t), ParseError);
    CHECK_THROWS_AS(parse("a[2,1]", t), EvalError);
    CHECK_THROWS_AS(parse("a[1,3]", t), EvalError);
    CHECK_THROWS_AS(parse("a[1,1]^-1", t), EvalError);
    CHECK_THROWS_AS(parse("t", t), EvalError);
    CHECK_THROWS_AS(parse("z", t), EvalError);
    CHECK_THROWS_AS(parse("(1+q)^-1", t), EvalError);
    try {
        parse("a[1,1] + $", t);
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 9);
    }
}

TEST_CASE("format examples") {
    TriangularAlgebra u(2, true), t3(3, false), t(2, false);
    CHECK(format(u.antipode(u.a(1, 2))) == "- a[1,1]^-1*a[1,2]*a[2,2]^-1");
    CHECK(format(Element(t.algebra())) == "0");
    CHECK(format(t3.b(1, 3)) == "q^2*a[1,2]*a[2,3] - q^3*a[1,3]*a[2,2]");
    CHECK(format(t.one()) == "1");
    CHECK(format((ScalarQ(1) + ScalarQ::q()) * t.a(1, 2)) == "(1 + q)*a[1,2]");
}

TEST_CASE("round trips") {
    RandomSource rng(47);
    for (int n = 2; n <= 4; ++n)
        for (bool loc : {false, true}) {
            TriangularAlgebra alg(n, loc);
            for (int k = 0; k < 50; ++k) {
                const Element e = rng.element(alg.algebra());
                const std::string text = format(e);
                INFO(text);
                CHECK(parse(text, alg) == e);
                CHECK(format(parse(text, alg)) == text);
            }
        }
}

TEST_CASE("scalars") {
    CHECK(parse_scalar("q^2 - 1") == ScalarQ::q_power(2) - ScalarQ(1));
    CHECK_THROWS_AS(parse_scalar("a[1,1]"), EvalError);
    RandomSource rng(53);
    for (int k = 0; k < 100; ++k) {
        const ScalarQ s = rng.scalar();
        CHECK(parse_scalar(format(s)) == s);
    }
}

}
