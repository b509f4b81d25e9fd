#pragma once

// Integer kernels and central monomials of q-commutative algebras.

#include "qtri/qalgebra.hpp"

#include <cstdint>
#include <vector>

namespace qtri {

using IntVector = std::vector<std::int64_t>;

/// Basis of {v in Z^cols : A v = 0} in Hermite normal form (rows of the
/// result, pivots positive, entries above pivots reduced).
std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t cols);

/// Row Hermite normal form of the lattice spanned by `rows`; zero rows dropped.
std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows);

struct CenterLattice {
    /// Basis of the null lattice {nu : M nu = 0}.
    std::vector<IntVector> lattice_basis;
    /// Basis of the null vectors supported on invertible generators; these
    /// give central units.
    std::vector<IntVector> unit_generators;
    /// Together with +-unit_generators these generate the monoid of central
    /// admissible exponent vectors.
    std::vector<IntVector> monoid_generators;
    /// Indices into lattice_basis of vectors with a negative entry on a
    /// non-invertible generator.
    std::vector<std::size_t> cone_violations;

    /// Central monomials exist beyond the scalars.
    bool nontrivial() const { return !unit_generators.empty() || !monoid_generators.empty(); }
};

/// x^nu is central iff M nu = 0; admissible exponents additionally need
/// nonnegative entries on non-invertible generators.
CenterLattice center_lattice(const QAlgebra& alg);

/// Minimal nonzero solutions of A x = 0, x >= 0 (Contejean-Devie completion).
/// Throws std::runtime_error when the search exceeds `max_candidates`.
std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& a, std::size_t cols,
                                     std::size_t max_candidates = 200000);

}  // namespace qtri
