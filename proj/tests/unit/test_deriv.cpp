#include "qtri/deriv.hpp"
#include "qtri/random.hpp"
#include "qtri/triangular.hpp"

#include <doctest.h>

using namespace qtri;

namespace {

DerivationSpec from_images(const TriangularAlgebra& t, std::vector<Element> imgs) {
    return DerivationSpec(t.algebra(), std::move(imgs));
}

}  // namespace

TEST_SUITE("deriv") {

TEST_CASE("validity of simple maps") {
    TriangularAlgebra t(2, false);
    const Element zero(t.algebra());
    CHECK(is_derivation(monomial_derivation(1, 2, {0, 1, 0})));
    CHECK(is_derivation(DerivationSpec::zero(t.algebra())));
    CHECK(!is_derivation(from_images(t, {zero, t.a(1, 1), zero})));
    CHECK(!is_derivation(monomial_derivation(1, 2, {1, 0, 0})));
}

TEST_CASE("classification predicate examples") {
    CHECK(is_derivation(monomial_derivation(1, 1, {0, 0, 1})));
    CHECK(is_derivation(monomial_derivation(1, 2, {2, 1, 3})));
    CHECK(!is_derivation(monomial_derivation(2, 2, {0, 1, 0})));
    CHECK(classification_predicate(1, 1, {1, 0, 0}));
    CHECK(!classification_predicate(1, 1, {1, 0, 1}));
    CHECK(classification_predicate(1, 2, {3, 1, 0}));
    CHECK_THROWS(classify_T2(0));
}

TEST_CASE("classification sweep, bound 2") {
    const auto rows = classify_T2(2);
    CHECK(rows.size() == 3 * 27);
    for (const auto& r : rows) CHECK(r.derivation == r.predicted);
}

TEST_CASE("Leibniz values on products") {
    TriangularAlgebra t(2, false);
    RandomSource rng(29);
    const DerivationSpec d = monomial_derivation(1, 1, {0, 0, 1});
    for (int n = 0; n < 30; ++n) {
        const Element x = rng.element(t.algebra()), y = rng.element(t.algebra());
        CHECK(apply_derivation(d, x * y) == apply_derivation(d, x) * y + x * apply_derivation(d, y));
    }
}

TEST_CASE("inner derivations") {
    TriangularAlgebra t(2, false), u(2, true);
    const DerivationSpec ad12 = inner_derivation(t.a(1, 2));
    const ScalarQ c = ScalarQ::q_power(-1) - ScalarQ(1);
    CHECK(ad12.image(t.index(1, 1)) == c * (t.a(1, 1) * t.a(1, 2)));
    CHECK(same_on_generators(inner_derivation(t.one()), DerivationSpec::zero(t.algebra())));
    const DerivationSpec addet = inner_derivation(u.det());
    CHECK(addet.image(u.index(1, 2)) == (ScalarQ(1) - ScalarQ::q_power(-2)) * (u.det() * u.a(1, 2)));
    RandomSource rng(31);
    for (int n = 0; n < 20; ++n) {
        CHECK(is_derivation(inner_derivation(rng.element(t.algebra()))));
        CHECK(is_derivation(inner_derivation(rng.element(u.algebra()))));
    }
}

TEST_CASE("commutators of derivations") {
    const auto reps = h1_representatives();
    for (const auto& [na, a] : reps)
        for (const auto& [nb, b] : reps) {
            INFO(na << ", " << nb);
            CHECK(is_derivation(commutator(a, b)));
        }
}

TEST_CASE("localized extension") {
    for (const auto& nu : {NuTriple{0, 0, 1}, NuTriple{1, 0, 0}}) {
        CHECK(is_derivation(monomial_derivation(1, 1, nu, true)));
        CHECK(is_derivation(monomial_derivation(2, 2, nu, true)));
    }
    CHECK(is_derivation(monomial_derivation(1, 2, {2, 1, 1}, true)));
    TriangularAlgebra u(2, true);
    const DerivationSpec d11 = monomial_derivation(1, 1, {1, 0, 0}, true);
    const Element inv = u.a(1, 1, -1);
    CHECK(apply_derivation(d11, inv) == -inv);
}

TEST_CASE("outer representatives") {
    const auto reps = h1_representatives();
    CHECK(reps.size() == 5);
    for (const auto& [name, d] : reps) CHECK(is_derivation(d));
    TriangularAlgebra t(2, false);
    const DerivationSpec ad11 = inner_derivation(t.a(1, 1));
    CHECK(ad11.image(t.index(1, 1)).is_zero());
    CHECK(reps[0].second.image(t.index(1, 1)) == t.a(1, 1));
    const CheckReport r = h1_membership_T2(2);
    CHECK(r.passed);
    CHECK(!r.notes.empty());
}

TEST_CASE("UT_q(2) table") {
    const CheckReport r = utq2_derivation_table();
    CHECK(r.passed);
    TriangularAlgebra u(2, true);
    const Element z = u.z();
    CHECK(z.unit_inverse() * u.a(1, 1) == u.a(2, 2));
    CHECK(ScalarQ(-1) * (z * (ScalarQ(-1) * (z.pow(-2) * u.a(1, 1)))) == u.a(2, 2));
}

}
