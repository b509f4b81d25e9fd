#include "qtri/json_io.hpp"
#include "qtri/random.hpp"
#include "qtri/triangular.hpp"

#include <doctest.h>

using namespace qtri;

TEST_SUITE("json") {

TEST_CASE("scalar form") {
    const ScalarQ s = ScalarQ(GaussianRational(mpq_class(1, 2), mpq_class(-3, 4)), -1) + ScalarQ::q_power(2);
    const Json j = to_json(s);
    CHECK(j == Json::parse("[[-1, 1, 2, -3, 4], [2, 1, 1, 0, 1]]"));
    CHECK(scalar_from_json(j) == s);
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[[0, 1, 0, 0, 1]]")), std::invalid_argument);
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[[0, 1]]")), std::invalid_argument);
}

TEST_CASE("big integers") {
    const ScalarQ s = ScalarQ(GaussianRational(mpq_class(1, 3))).pow(100);
    CHECK(scalar_from_json(Json::parse(to_json(s).dump())) == s);
}

TEST_CASE("element and algebra round trips") {
    RandomSource rng(59);
    for (bool loc : {false, true}) {
        TriangularAlgebra t(3, loc);
        const AlgebraPtr back = algebra_from_json(Json::parse(to_json(*t.algebra()).dump()));
        CHECK(*back == *t.algebra());
        for (int k = 0; k < 20; ++k) {
            const Element e = rng.element(t.algebra());
            CHECK(element_from_json(to_json(e), back) == e);
        }
    }
    TriangularAlgebra t(2, false);
    CHECK_THROWS_AS(element_from_json(Json::parse("[[[-1,0,0], [[0,1,1,0,1]]]]"), t.algebra()), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(Json::parse("{\"names\": [\"x\"]}")), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"names": ["x","y"], "M": [[0,1],[1,0]]})")),
                    std::invalid_argument);
}

TEST_CASE("reports") {
    CheckReport r;
    r.name = "x";
    r.n = 2;
    r.passed = false;
    r.witness = Witness{"id", "a", "b"};
    const Json j = to_json(r);
    CHECK(j["passed"] == false);
    CHECK(j["witness"]["lhs"] == "a");
}

}
