#include "qtri/autos.hpp"

#include <doctest.h>

using namespace qtri;

namespace {

Sextuple S(long l12, long l11, long l22, std::int64_t j, std::int64_t k, std::int64_t l) {
    return {ScalarQ(l12), ScalarQ(l11), ScalarQ(l22), j, k, l};
}

// Oracle: the composite endomorphism, compared on generators.
bool composes_to(const Sextuple& s1, const Sextuple& s2, const Sextuple& product) {
    return same_images(compose(g_to_endo(s1), g_to_endo(s2)), g_to_endo(product));
}

}  // namespace

TEST_SUITE("autos") {

TEST_CASE("sextuple scalars must be units") {
    CHECK_THROWS_AS(Sextuple(ScalarQ(1) + ScalarQ::q(), ScalarQ(1), ScalarQ(1), 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Sextuple(ScalarQ(0), ScalarQ(1), ScalarQ(1), 0, 0, 0), std::invalid_argument);
}

TEST_CASE("g_to_endo") {
    const auto& u = ut2();
    const auto id = g_to_endo(Sextuple::identity());
    for (std::size_t g = 0; g < 3; ++g) CHECK(id.image(g) == Element::generator(u.algebra(), g));
    const auto zj = g_to_endo(S(1, 1, 1, 1, 0, 0));
    CHECK(zj.image(u.index(1, 1)) == u.z() * u.a(1, 1));
    CHECK(zj.image(u.index(2, 2)) == u.z() * u.a(2, 2));
    CHECK(zj.image(u.index(1, 2)) == u.a(1, 2));
    const auto k1 = g_to_endo(S(1, 1, 1, 0, 1, 0));
    CHECK(k1.image(u.index(1, 2)) == u.a(1, 1) * u.a(1, 2));
    CHECK(k1.image(u.index(1, 1)) == u.a(1, 1));
}

TEST_CASE("g_compose") {
    const Sextuple s = S(5, 2, 3, 1, -2, 4);
    CHECK(g_compose(s, Sextuple::identity()) == s);
    CHECK(g_compose(Sextuple::identity(), s) == s);
    CHECK(g_compose(S(1, 1, 1, 1, 0, 0), S(1, 1, 1, 0, 1, 0)) == S(1, 1, 1, 1, 2, -1));
    CHECK(composes_to(S(1, 1, 1, 1, 0, 0), S(1, 1, 1, 0, 1, 0), S(1, 1, 1, 1, 2, -1)));
    const Sextuple p = g_compose(S(1, 2, 3, 0, 0, 0), S(1, 1, 1, 1, 0, 0));
    const ScalarQ two_thirds(GaussianRational(mpq_class(2, 3)));
    CHECK(p.l11 == ScalarQ(2) * two_thirds);
    CHECK(p.l22 == ScalarQ(3) * two_thirds);
    CHECK(composes_to(S(1, 2, 3, 0, 0, 0), S(1, 1, 1, 1, 0, 0), p));
    // The other order of composition does not match the formula here.
    CHECK(!same_images(compose(g_to_endo(S(1, 1, 1, 0, 1, 0)), g_to_endo(S(1, 1, 1, 1, 0, 0))),
                       g_to_endo(g_compose(S(1, 1, 1, 1, 0, 0), S(1, 1, 1, 0, 1, 0)))));
}

TEST_CASE("g_inverse") {
    CHECK(g_inverse(Sextuple::identity()) == Sextuple::identity());
    CHECK(g_inverse(S(1, 1, 1, 1, 0, 0)) == S(1, 1, 1, -1, 0, 0));
    CHECK(g_inverse(S(1, 1, 1, 0, 2, 1)) == S(1, 1, 1, 0, -2, -1));
    RandomSource rng(41);
    for (int n = 0; n < 100; ++n) {
        const Sextuple s = random_sextuple(rng);
        CHECK(g_compose(s, g_inverse(s)) == Sextuple::identity());
        CHECK(g_compose(g_inverse(s), s) == Sextuple::identity());
    }
}

TEST_CASE("rho_conjugate") {
    const Sextuple s(ScalarQ::q(), ScalarQ(2), ScalarQ(GaussianRational(0, 1)), 2, -1, 3);
    const Sextuple c = rho_conjugate(s);
    CHECK(c == Sextuple(ScalarQ::q(), ScalarQ(GaussianRational(0, 1)), ScalarQ(2), -2, 3, -1));
    CHECK(rho_conjugate(c) == s);
    CHECK(rho_conjugate(Sextuple::identity()) == Sextuple::identity());
    const auto& rho = ut2().rho_spec();
    CHECK(same_images(compose(rho, compose(g_to_endo(s), rho)), g_to_endo(c)));
}

TEST_CASE("g_decompose") {
    auto [a, b, c] = g_decompose(Sextuple::identity());
    CHECK(a == Sextuple::identity());
    CHECK(b == Sextuple::identity());
    CHECK(c == Sextuple::identity());
    std::tie(a, b, c) = g_decompose(S(1, 1, 1, 1, 2, -1));
    CHECK(a == S(1, 1, 1, 1, 0, 0));
    CHECK(b == S(1, 1, 1, 0, 1, 0));
    CHECK(c == Sextuple::identity());
    CHECK(g_compose(a, g_compose(b, c)) == S(1, 1, 1, 1, 2, -1));
    std::tie(a, b, c) = g_decompose(S(5, 2, 3, 0, 4, 7));
    CHECK(a == Sextuple::identity());
    CHECK(b == S(1, 1, 1, 0, 4, 7));
    CHECK(c == S(5, 2, 3, 0, 0, 0));
}

TEST_CASE("Hopf automorphisms") {
    const Sextuple h(ScalarQ::q_power(3), ScalarQ(1), ScalarQ(1), 2, 2, -2);
    CHECK(is_hopf_auto(h));
    CHECK(hopf_compatible(g_to_endo(h), ut2()));
    CHECK(is_hopf_auto(Sextuple::identity()));
    CHECK(!is_hopf_auto(S(1, 1, 1, 0, 1, 0)));
    CHECK(!hopf_compatible(g_to_endo(S(1, 1, 1, 0, 1, 0)), ut2()));
    CHECK(!hopf_compatible(g_to_endo(S(1, 2, 1, 0, 0, 0)), ut2()));
}

TEST_CASE("text form") {
    const Sextuple s = parse_sextuple("[q^-1, (1/2+3/4*i), -2*q, 1, -2, 3]");
    CHECK(s.l12 == ScalarQ::q_power(-1));
    CHECK(s.l11 == ScalarQ(GaussianRational(mpq_class(1, 2), mpq_class(3, 4))));
    CHECK(s.l22 == ScalarQ(GaussianRational(-2), 1));
    CHECK(s.j == 1);
    CHECK(s.k == -2);
    CHECK(s.l == 3);
    CHECK(parse_sextuple(format(s)) == s);
    CHECK_THROWS_AS(parse_sextuple("[1,1,1,0,0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sextuple("[1,1,1+q,0,0,0]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_sextuple("[1,1,1,0,0,x]"), std::invalid_argument);
}

TEST_CASE("linear automorphisms of T_q(2)") {
    const auto& t = t2();
    const auto id = linear_auto_spec({});
    for (std::size_t g = 0; g < 3; ++g) CHECK(id.image(g) == Element::generator(t.algebra(), g));
    LinearAuto2 flip;
    flip.a = {{{ScalarQ(), ScalarQ(1)}, {ScalarQ(1), ScalarQ()}}};
    CHECK(same_images(linear_auto_spec(flip), t.rho_spec()));
    LinearAuto2 diag{ScalarQ::q(), {{{ScalarQ(2), ScalarQ()}, {ScalarQ(), ScalarQ(3)}}}};
    const auto d = linear_auto_spec(diag);
    CHECK(d.image(t.index(1, 2)) == ScalarQ::q() * t.a(1, 2));
    CHECK(d.image(t.index(1, 1)) == ScalarQ(2) * t.a(1, 1));
    CHECK(d.image(t.index(2, 2)) == ScalarQ(3) * t.a(2, 2));
    LinearAuto2 singular;
    singular.a = {{{ScalarQ(1), ScalarQ(2)}, {ScalarQ(2), ScalarQ(4)}}};
    CHECK_THROWS_AS(linear_auto_spec(singular), std::invalid_argument);
    CHECK_THROWS_AS(linear_auto_spec({ScalarQ(), {}}), std::invalid_argument);

    RandomSource rng(43);
    for (int n = 0; n < 30; ++n) {
        LinearAuto2 x{rng.unit_scalar(), {{{rng.scalar(), rng.scalar()}, {rng.scalar(), rng.scalar()}}}};
        LinearAuto2 y{rng.unit_scalar(), {{{rng.scalar(), rng.scalar()}, {rng.scalar(), rng.scalar()}}}};
        if (determinant(x.a).is_zero() || determinant(y.a).is_zero()) continue;
        CHECK(same_images(compose(linear_auto_spec(x), linear_auto_spec(y)), linear_auto_spec(x * y)));
    }
}

}
