#pragma once

// Derivations given by generator images and extended by the Leibniz rule.

#include "qtri/qalgebra.hpp"
#include "qtri/structure.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qtri {

struct DerivationSpec {
    AlgebraPtr algebra;
    std::vector<Element> images;

    /// Throws std::invalid_argument on a size or algebra mismatch.
    DerivationSpec(AlgebraPtr alg, std::vector<Element> imgs);
    static DerivationSpec zero(const AlgebraPtr& alg);

    const Element& image(std::size_t g) const { return images.at(g); }
};

/// Leibniz extension; D(g^-1) = -g^-1 D(g) g^-1 on inverted generators.
Element apply_derivation(const DerivationSpec& d, const Element& e);

/// D(a) b + a D(b) = q^{M[a][b]} (D(b) a + b D(a)) for every generator pair.
bool is_derivation(const DerivationSpec& d);

/// Generator images x g - g x.
DerivationSpec inner_derivation(const Element& x);

DerivationSpec operator+(const DerivationSpec& a, const DerivationSpec& b);
DerivationSpec operator-(const DerivationSpec& a, const DerivationSpec& b);
DerivationSpec operator*(const ScalarQ& c, const DerivationSpec& d);
/// c D on generators; a derivation again when c is central.
DerivationSpec left_multiple(const Element& c, const DerivationSpec& d);
/// [D, E] = D E - E D on generators.
DerivationSpec commutator(const DerivationSpec& d, const DerivationSpec& e);
bool same_on_generators(const DerivationSpec& a, const DerivationSpec& b);

/// Exponents of a11^nu11 a12^nu12 a22^nu22.
using NuTriple = std::array<std::int64_t, 3>;

/// D_{st,nu} on T_q(2) (or UT_q(2) when `localized`): a_st -> a^nu, other
/// generators -> 0. (s, t) in {(1,1), (1,2), (2,2)}.
DerivationSpec monomial_derivation(int s, int t, const NuTriple& nu, bool localized = false);

struct ClassificationRow {
    int s;
    int t;
    NuTriple nu;
    bool derivation;
    /// (1,1), (2,2): nu in {(0,0,1), (1,0,0)}; (1,2): nu12 = 1.
    bool predicted;
};

/// All (s, t) and all nu with entries in [0, bound].
std::vector<ClassificationRow> classify_T2(int bound);
bool classification_predicate(int s, int t, const NuTriple& nu);

/// D11, D12, D22, D_{11,(0,0,1)}, D_{22,(1,0,0)} on T_q(2).
std::vector<std::pair<std::string, DerivationSpec>> h1_representatives();

/// The five representatives are derivations and no nontrivial combination of
/// them is ad_x for x a combination of monomials of degree <= degree_bound.
CheckReport h1_membership_T2(int degree_bound = 3);

/// d11-bar, d12-bar and d/dz on UT_q(2) against D11, D12, D22.
CheckReport utq2_derivation_table();

}  // namespace qtri
