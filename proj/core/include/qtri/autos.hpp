#pragma once

// Automorphisms of T_q(2) and UT_q(2).
//
// The sextuple (l12, l11, l22, j, k, l) stands for the UT_q(2) endomorphism
//   a12 -> l12 a11^k a22^l a12,   a_ii -> l_ii z^j a_ii,   z = a11 a22^-1.
// g_compose(s1, s2) is the sextuple of g_to_endo(s1) o g_to_endo(s2).

#include "qtri/coeff.hpp"
#include "qtri/morphism.hpp"
#include "qtri/random.hpp"
#include "qtri/triangular.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>

namespace qtri {

struct Sextuple {
    ScalarQ l12{1};
    ScalarQ l11{1};
    ScalarQ l22{1};
    std::int64_t j = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;

    Sextuple() = default;
    /// Throws std::invalid_argument unless every lambda is a unit.
    Sextuple(ScalarQ l12, ScalarQ l11, ScalarQ l22, std::int64_t j, std::int64_t k, std::int64_t l);

    static Sextuple identity() { return {}; }

    friend bool operator==(const Sextuple&, const Sextuple&) = default;
};

const TriangularAlgebra& ut2();
const TriangularAlgebra& t2();

MorphismSpec<Element> g_to_endo(const Sextuple& s);
Sextuple g_compose(const Sextuple& s1, const Sextuple& s2);
Sextuple g_inverse(const Sextuple& s);
/// Sextuple of rho o phi o rho.
Sextuple rho_conjugate(const Sextuple& s);
/// s = g1 * (g2 * g3) with g1 = (1,1,1,j,0,0), g2 = (1,1,1,0,k',l'),
/// g3 = (l12,l11,l22,0,0,0).
std::tuple<Sextuple, Sextuple, Sextuple> g_decompose(const Sextuple& s);
/// l11 = l22 = 1 and (k, l) = (j, -j).
bool is_hopf_auto(const Sextuple& s);

/// (phi (x) phi) Delta = Delta phi and eps phi = eps on every generator.
bool hopf_compatible(const MorphismSpec<Element>& phi, const TriangularAlgebra& alg);

/// Images of `a` and `b` agree on every generator.
bool same_images(const MorphismSpec<Element>& a, const MorphismSpec<Element>& b);

/// "[l12,l11,l22,j,k,l]" with scalars in the coefficient text syntax.
Sextuple parse_sextuple(std::string_view text);
std::string format(const Sextuple& s);

/// Unit lambdas from the random coefficient pool, integers in [-range, range].
Sextuple random_sextuple(RandomSource& rng, std::int64_t range = 3);

using Matrix2 = std::array<std::array<ScalarQ, 2>, 2>;

/// a12 -> lambda a12, a11 -> A00 a11 + A10 a22, a22 -> A01 a11 + A11 a22.
struct LinearAuto2 {
    ScalarQ lambda{1};
    Matrix2 a{{{ScalarQ(1), ScalarQ()}, {ScalarQ(), ScalarQ(1)}}};

    friend bool operator==(const LinearAuto2&, const LinearAuto2&) = default;
};

ScalarQ determinant(const Matrix2& m);
Matrix2 operator*(const Matrix2& x, const Matrix2& y);
/// Product in K* x GL_2: (lambda mu, A B).
LinearAuto2 operator*(const LinearAuto2& x, const LinearAuto2& y);

/// Throws std::invalid_argument for lambda = 0 or det(A) = 0.
MorphismSpec<Element> linear_auto_spec(const LinearAuto2& phi);

}  // namespace qtri
