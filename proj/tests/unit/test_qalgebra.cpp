#include "qtri/lattice.hpp"
#include "qtri/linear.hpp"
#include "qtri/morphism.hpp"
#include "qtri/qalgebra.hpp"
#include "qtri/random.hpp"
#include "qtri/tensor.hpp"
#include "qtri/triangular.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace qtri;

namespace {

Monomial mono(std::vector<std::int64_t> e) { return Monomial(std::move(e)); }

// Central monomials in a box, found by multiplying against every generator.
std::vector<IntVector> central_in_box(const AlgebraPtr& alg, std::int64_t r) {
    const std::size_t n = alg->size();
    std::vector<IntVector> out;
    IntVector v(n, -r);
    for (;;) {
        Monomial m(v);
        bool zero = std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
        if (!zero && alg->admissible(m)) {
            const Element x = Element::monomial(alg, m);
            bool central = true;
            for (std::size_t g = 0; g < n && central; ++g) {
                const Element y = Element::generator(alg, g);
                central = x * y == y * x;
            }
            if (central) out.push_back(v);
        }
        std::size_t p = 0;
        while (p < n && v[p] == r) v[p++] = -r;
        if (p == n) break;
        ++v[p];
    }
    return out;
}

bool in_span(const std::vector<IntVector>& basis, IntVector v) {
    // basis is in Hermite form: reduce by pivots left to right.
    for (const auto& row : basis) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        if (v[p] % row[p] != 0) return false;
        const auto c = v[p] / row[p];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * row[k];
    }
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

TEST_SUITE("qalgebra") {

TEST_CASE("monomial_mul") {
    auto a2 = quantum_affine_space(2);
    auto p = monomial_mul(mono({0, 1}), mono({1, 0}), *a2);
    CHECK(p.qpow == 1);
    CHECK(p.monomial == mono({1, 1}));
    p = monomial_mul(mono({2, 1}), mono({0, 0}), *a2);
    CHECK(p.qpow == 0);
    CHECK(p.monomial == mono({2, 1}));

    TriangularAlgebra t(2, false);
    p = monomial_mul(mono({0, 0, 1}), mono({0, 1, 0}), *t.algebra());
    CHECK(p.qpow == 1);
    CHECK(p.monomial == mono({0, 1, 1}));
}

TEST_CASE("monomial_mul agrees with adjacent swaps") {
    TriangularAlgebra t(4, false);
    RandomSource rng(11);
    const auto& alg = *t.algebra();
    for (int n = 0; n < 200; ++n) {
        Monomial x(alg.size()), y(alg.size());
        std::vector<std::size_t> word;
        for (std::size_t g = 0; g < alg.size(); ++g) x[g] = rng.uniform(0, 2);
        for (std::size_t g = 0; g < alg.size(); ++g) y[g] = rng.uniform(0, 2);
        for (std::size_t g = 0; g < alg.size(); ++g)
            for (int e = 0; e < x[g]; ++e) word.push_back(g);
        for (std::size_t g = 0; g < alg.size(); ++g)
            for (int e = 0; e < y[g]; ++e) word.push_back(g);
        const auto expected = oracle::bubble_sort(alg, word);
        const auto got = monomial_mul(x, y, alg);
        CHECK(got.qpow == expected.first);
    }
}

TEST_CASE("element products in T_q(2)") {
    TriangularAlgebra t(2, false);
    const Element a11 = t.a(1, 1), a12 = t.a(1, 2), a22 = t.a(2, 2);
    const ScalarQ q = ScalarQ::q();
    CHECK((a11 + a22) * a12 == q * (a12 * a11) + q * (a12 * a22));
    CHECK(a12 * t.one() == a12);
    // a12 a11 = q^-1 a11 a12, twice.
    const Element expected = oracle::word_element(t.algebra(), {1, 1, 0});
    CHECK(a12 * a12 * a11 == expected);
    CHECK(a12 * a12 * a11 == ScalarQ::q_power(-2) * (a11 * a12 * a12));
}

TEST_CASE("addition and scaling") {
    TriangularAlgebra t(2, false);
    const Element a = t.a(1, 2) + t.a(1, 1);
    CHECK((a + ScalarQ(-1) * a).is_zero());
    CHECK(ScalarQ::q() * t.a(1, 2) + t.a(1, 2) == (ScalarQ(1) + ScalarQ::q()) * t.a(1, 2));
    CHECK((ScalarQ() * a).is_zero());
    TriangularAlgebra other(3, false);
    CHECK_THROWS_AS(a + other.a(1, 1), std::invalid_argument);
}

TEST_CASE("associativity on random triples") {
    for (bool loc : {false, true}) {
        TriangularAlgebra t(3, loc);
        RandomSource rng(3);
        for (int n = 0; n < 60; ++n) {
            const Element x = rng.element(t.algebra()), y = rng.element(t.algebra()), z = rng.element(t.algebra());
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
        }
    }
}

TEST_CASE("units and inverses") {
    TriangularAlgebra u(2, true);
    const Element x = ScalarQ(GaussianRational(2, 1), 3) * (u.a(1, 1, -2) * u.a(2, 2, 5));
    REQUIRE(x.is_unit());
    CHECK(x * x.unit_inverse() == u.one());
    CHECK(x.unit_inverse() * x == u.one());
    CHECK(!u.a(1, 2).is_unit());
    CHECK(!(u.a(1, 1) + u.a(2, 2)).is_unit());
    CHECK_THROWS_AS(u.a(1, 2).unit_inverse(), std::domain_error);
}

TEST_CASE("tensor products") {
    TriangularAlgebra t(2, false);
    const auto A = t.algebra();
    const TensorElement a11_1 = TensorElement::pure({t.a(1, 1), t.one()});
    const TensorElement one_a12 = TensorElement::pure({t.one(), t.a(1, 2)});
    CHECK(a11_1 * one_a12 == TensorElement::pure({t.a(1, 1), t.a(1, 2)}));
    const TensorElement one = TensorElement::one({A, A});
    CHECK(one * a11_1 == a11_1);
    const TensorElement a12_1 = TensorElement::pure({t.a(1, 2), t.one()});
    CHECK(a12_1 * a11_1 == ScalarQ::q_power(-1) * TensorElement::pure({t.a(1, 1) * t.a(1, 2), t.one()}));
}

TEST_CASE("counit contractions recover elements") {
    TriangularAlgebra t(3, false);
    RandomSource rng(5);
    auto eps = [&t](const Monomial& m) { return t.counit_spec().apply(Element::monomial(t.algebra(), m)); };
    for (int n = 0; n < 40; ++n) {
        const Element x = rng.element(t.algebra());
        const TensorElement d = t.coproduct_spec().apply(x);
        CHECK(collapse(contract_factor(d, 0, eps)) == x);
        CHECK(collapse(contract_factor(d, 1, eps)) == x);
    }
}

TEST_CASE("is_point") {
    TriangularAlgebra t(2, false);
    std::vector<Element> gens{t.a(1, 1), t.a(1, 2), t.a(2, 2)};
    CHECK(is_point(gens, *t.algebra()));
    std::vector<ScalarQ> delta{ScalarQ(1), ScalarQ(0), ScalarQ(1)};
    CHECK(is_point(delta, *t.algebra()));
    std::vector<Element> swapped{t.a(1, 2), t.a(1, 1), t.a(2, 2)};
    CHECK(!is_point(swapped, *t.algebra()));
    CHECK_THROWS_AS(MorphismSpec<Element>(t.algebra(), swapped), PointCheckError);
}

TEST_CASE("apply_morphism") {
    TriangularAlgebra t2(2, false), t3(3, false);
    CHECK(t2.sigma(t2.a(1, 2)) == ScalarQ::q_power(-2) * t2.a(1, 2));
    CHECK(t3.rho(t3.a(1, 2)) == t3.a(2, 3));
    const MorphismSpec<Element> id(t3.algebra(), {t3.a(1, 1), t3.a(1, 2), t3.a(1, 3), t3.a(2, 2), t3.a(2, 3), t3.a(3, 3)});
    RandomSource rng(13);
    for (int n = 0; n < 30; ++n) {
        const Element x = rng.element(t3.algebra());
        CHECK(id.apply(x) == x);
        CHECK(t3.sigma_inverse_spec().apply(t3.sigma(x)) == x);
    }
}

TEST_CASE("antimorphism extension reverses products") {
    TriangularAlgebra u(3, true);
    RandomSource rng(17);
    for (int n = 0; n < 30; ++n) {
        const Element x = rng.element(u.algebra(), 3), y = rng.element(u.algebra(), 3);
        CHECK(u.antipode(x * y) == u.antipode(y) * u.antipode(x));
    }
}

TEST_CASE("central monomials") {
    for (int n = 2; n <= 3; ++n) {
        TriangularAlgebra t(n, false);
        CHECK(!center_lattice(*t.algebra()).nontrivial());
        CHECK(central_in_box(t.algebra(), 2).empty());
    }
    TriangularAlgebra u(2, true);
    const CenterLattice c = center_lattice(*u.algebra());
    CHECK(c.lattice_basis == std::vector<IntVector>{{1, 0, -1}});
    CHECK(c.unit_generators == std::vector<IntVector>{{1, 0, -1}});
    CHECK(c.monoid_generators.empty());
    for (const auto& v : central_in_box(u.algebra(), 2)) CHECK(in_span(c.unit_generators, v));

    auto comm = std::make_shared<const QAlgebra>(std::vector<std::string>{"x", "y", "w"},
                                                 std::vector<bool>{false, false, false},
                                                 IntMatrix{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
    const CenterLattice cc = center_lattice(*comm);
    CHECK(cc.monoid_generators == std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    CHECK(cc.unit_generators.empty());
}

TEST_CASE("central monomials outside the unit group") {
    // x y = q y x, u x = q x u, u y = q^-1 y u with u invertible: x y u is central.
    auto alg = std::make_shared<const QAlgebra>(std::vector<std::string>{"x", "y", "u"},
                                                std::vector<bool>{false, false, true},
                                                IntMatrix{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}});
    const CenterLattice c = center_lattice(*alg);
    CHECK(c.lattice_basis == std::vector<IntVector>{{1, 1, 1}});
    CHECK(c.unit_generators.empty());
    CHECK(c.monoid_generators == std::vector<IntVector>{{1, 1, 1}});
    CHECK(central_in_box(alg, 2) == std::vector<IntVector>{{1, 1, 1}, {2, 2, 2}});
}

TEST_CASE("central monomials of UT_q(3) match a brute-force search") {
    TriangularAlgebra u(3, true);
    const CenterLattice c = center_lattice(*u.algebra());
    for (const auto& v : central_in_box(u.algebra(), 1)) {
        CHECK(in_span(c.lattice_basis, v));
    }
    for (std::size_t r = 0; r < c.lattice_basis.size(); ++r) {
        const bool flagged = std::count(c.cone_violations.begin(), c.cone_violations.end(), r) > 0;
        CHECK(u.algebra()->admissible(Monomial(c.lattice_basis[r])) == !flagged);
    }
}

TEST_CASE("integer kernel and Hilbert basis") {
    auto k = integer_kernel(IntMatrix{{1, 1, 1}}, 3);
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(v[0] + v[1] + v[2] == 0);
    // x + y = 2 w: minimal solutions (2,0,1), (1,1,1), (0,2,1).
    auto h = hilbert_basis({{1, 1, -2}}, 3);
    std::sort(h.begin(), h.end());
    CHECK(h == std::vector<IntVector>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}});
}

TEST_CASE("rank over the Laurent ring") {
    const ScalarQ q = ScalarQ::q();
    CHECK(rank({{ScalarQ(1), q}, {q, q * q}}) == 1);
    CHECK(rank({{ScalarQ(1), q}, {q, ScalarQ(1)}}) == 2);
    CHECK(rank({{ScalarQ(), ScalarQ()}, {ScalarQ(), ScalarQ()}}) == 0);
    CHECK(rank({{ScalarQ(1), ScalarQ(2), ScalarQ(3)}, {ScalarQ(2), ScalarQ(4), ScalarQ(6)}, {q, ScalarQ(), ScalarQ(1)}}) == 2);
}

}
