#pragma once

// Verification suites for the bialgebra, Hopf and star structures at fixed n.
// Each suite reports the first failing identity with both sides printed.

#include "qtri/morphism.hpp"
#include "qtri/triangular.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtri {

struct Witness {
    std::string label;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    std::string name;
    int n = 0;
    bool passed = true;
    std::optional<Witness> witness;
    /// Number of identities compared.
    std::size_t checks = 0;
    std::vector<std::string> notes;
};

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Coassociativity, both counit laws and multiplicativity of Delta and eps,
/// on T_q(n) and UT_q(n).
CheckReport check_bialgebra(int n, std::uint64_t seed = kDefaultSeed);
/// Convolution identities for S in UT_q(n) and for b in T_q(n).
CheckReport check_antipode(int n);
CheckReport check_S_squared(int n);
CheckReport check_commutation_lemmas(int n);
/// sigma, rho, gamma against Delta, eps and S; theta for even n.
CheckReport check_morphism_symmetries(int n, std::uint64_t seed = kDefaultSeed);
CheckReport check_star(int n, std::uint64_t seed = kDefaultSeed, int samples = 40);
CheckReport check_point_product(int n);
/// Both recurrences agree with the chain sums, all i < j.
CheckReport check_b_recurrences(int n);
/// det against generators and b, diagonal products against a_ij, rho and
/// sigma on b.
CheckReport check_det_relations(int n, std::uint64_t seed = kDefaultSeed);
/// x' and x'' in T_q(n) (x) A_n(q) satisfy the quantum plane relations.
CheckReport check_coaction(int n);

std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.
CheckReport run_suite(const std::string& name, int n, std::uint64_t seed = kDefaultSeed);

// Parametrized cores, shared with the negative controls.

CheckReport check_bialgebra_maps(const TriangularAlgebra& alg, const MorphismSpec<TensorElement>& delta,
                                 const MorphismSpec<ScalarQ>& eps, std::uint64_t seed,
                                 const std::string& name = "bialgebra");

/// `b` maps (i, j) to the T_q(n) element used for b_ij; `s` is the candidate
/// antipode on UT_q(n) (images t b_ij).
CheckReport check_antipode_with(const TriangularAlgebra& tri, const TriangularAlgebra& utri,
                                const std::map<TriIndex, Element>& b, const MorphismSpec<Element>& s,
                                const std::string& name = "antipode");

struct CommutationTables {
    std::function<int(int k, int i, int j)> diagonal;       // a_kk b_ij and b_kk sigma(b_ij)
    std::function<int(int k, int l, int i, int j)> a_b;     // a_kl b_ij
    std::function<int(int k, int l, int i, int j)> b_b;     // b_kl sigma(b_ij)
};

CommutationTables stated_commutation_tables();
CheckReport check_commutation_lemmas(int n, const CommutationTables& tables,
                                     const std::string& name = "commutation");

/// A = (a_ij (x) 1), B as given in T_q(n) (x) T_q(n); checks A, B and AB are points.
CheckReport check_point_product_with(const TriangularAlgebra& alg, const std::vector<TensorElement>& b,
                                     const std::string& name = "point-product");

/// Deliberately broken structures; every report must fail with a witness.
namespace controls {

CheckReport mutated_coproduct();
CheckReport flipped_b12_sign();
CheckReport broken_point_product();
CheckReport wrong_commutation_table();
std::vector<CheckReport> all();

}  // namespace controls

}  // namespace qtri
