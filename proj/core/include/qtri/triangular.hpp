#pragma once

// The quantum upper-triangular bialgebra T_q(n) and its localization UT_q(n)
// at the diagonal generators, with coproduct, counit, symmetries and antipode.

#include "qtri/morphism.hpp"
#include "qtri/qalgebra.hpp"
#include "qtri/tensor.hpp"

#include <optional>
#include <vector>

namespace qtri {

struct TriIndex {
    int i;
    int j;
    friend auto operator<=>(const TriIndex&, const TriIndex&) = default;
};

/// e with a_p a_r = q^e a_r a_p, read off the four defining relation
/// families. Throws std::logic_error unless exactly one family matches.
int comm_exponent(TriIndex p, TriIndex r, int n);

enum class Side { left, right };

class TriangularAlgebra {
public:
    /// Throws std::invalid_argument for n < 2.
    TriangularAlgebra(int n, bool localized);

    int n() const { return n_; }
    bool localized() const { return localized_; }
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t generator_count() const { return alg_->size(); }

    /// Position of a_ij in the lexicographic generator order; throws std::out_of_range.
    std::size_t index(int i, int j) const;
    TriIndex tri_index(std::size_t g) const { return order_.at(g); }
    bool valid(int i, int j) const { return 1 <= i && i <= j && j <= n_; }

    Element one() const { return Element::one(alg_); }
    Element scalar(const ScalarQ& c) const { return Element::scalar(alg_, c); }
    Element a(int i, int j, std::int64_t power = 1) const;
    Element det() const;
    /// det^-1; throws std::logic_error on T_q(n).
    Element t() const;
    /// a_11 a_22^-1 (any n); throws std::logic_error on T_q(n).
    Element z() const;

    /// Chain-sum elements; throws std::out_of_range for invalid indices.
    Element b(int i, int j) const;
    /// Value of the left or right recurrence for b_ij, i < j; needs UT_q(n).
    Element b_recurrence(int i, int j, Side side) const;

    const MorphismSpec<TensorElement>& coproduct_spec() const { return *delta_; }
    const MorphismSpec<ScalarQ>& counit_spec() const { return *eps_; }
    const MorphismSpec<Element>& sigma_spec() const { return *sigma_; }
    const MorphismSpec<Element>& sigma_inverse_spec() const { return *sigma_inv_; }
    const MorphismSpec<Element>& rho_spec() const { return *rho_; }
    const MorphismSpec<Element>& gamma_spec() const { return *gamma_; }
    /// Signed reflection; throws std::logic_error for odd n.
    const MorphismSpec<Element>& theta_spec() const;
    /// Throws std::logic_error on T_q(n).
    const MorphismSpec<Element>& antipode_spec() const;
    const MorphismSpec<Element>& star_spec() const;

    TensorElement coproduct(const Element& e) const { return delta_->apply(e); }
    ScalarQ counit(const Element& e) const { return eps_->apply(e); }
    Element sigma(const Element& e) const { return sigma_->apply(e); }
    Element rho(const Element& e) const { return rho_->apply(e); }
    Element gamma(const Element& e) const { return gamma_->apply(e); }
    Element antipode(const Element& e) const { return antipode_spec().apply(e); }
    Element star(const Element& e) const { return star_spec().apply(e); }

    /// The images a_ij -> theta-signed reflection, without a verified spec.
    std::vector<Element> theta_images() const;

private:
    int n_;
    bool localized_;
    AlgebraPtr alg_;
    std::vector<TriIndex> order_;
    std::optional<MorphismSpec<TensorElement>> delta_;
    std::optional<MorphismSpec<ScalarQ>> eps_;
    std::optional<MorphismSpec<Element>> sigma_;
    std::optional<MorphismSpec<Element>> sigma_inv_;
    std::optional<MorphismSpec<Element>> rho_;
    std::optional<MorphismSpec<Element>> gamma_;
    std::optional<MorphismSpec<Element>> theta_;
    std::optional<MorphismSpec<Element>> antipode_;
    std::optional<MorphismSpec<Element>> star_;
};

/// Presentation only, without the structure maps.
AlgebraPtr triangular_presentation(int n, bool localized);

/// Tensor of two elements of possibly different algebras.
TensorElement tensor(const Element& u, const Element& v);

}  // namespace qtri
