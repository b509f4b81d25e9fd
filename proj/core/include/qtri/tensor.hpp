#pragma once

#include "qtri/qalgebra.hpp"

#include <functional>
#include <map>
#include <vector>

namespace qtri {

/// Element of A_1 (x) ... (x) A_k with the componentwise product
/// (u (x) v)(u' (x) v') = uu' (x) vv'. Arity two is the common case.
class TensorElement {
public:
    using Key = std::vector<Monomial>;
    using TermMap = std::map<Key, ScalarQ>;

    explicit TensorElement(std::vector<AlgebraPtr> factors);

    static TensorElement one(std::vector<AlgebraPtr> factors);
    /// e_1 (x) e_2 (x) ... (x) e_k.
    static TensorElement pure(const std::vector<Element>& parts);

    const std::vector<AlgebraPtr>& factors() const { return factors_; }
    std::size_t arity() const { return factors_.size(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_unit() const;
    TensorElement unit_inverse() const;

    void add_term(const Key& key, const ScalarQ& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);

    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const ScalarQ& c, const TensorElement& a);
    friend TensorElement operator-(const TensorElement& a);
    friend bool operator==(const TensorElement& a, const TensorElement& b);

private:
    void require_compatible(const TensorElement& o) const;

    std::vector<AlgebraPtr> factors_;
    TermMap terms_;
};

inline bool is_unit(const TensorElement& t) { return t.is_unit(); }
inline TensorElement unit_inverse(const TensorElement& t) { return t.unit_inverse(); }

/// Replaces tensor factor `index` by the image of each of its basis monomials;
/// the image may have any arity >= 1, so this both maps and splits factors
/// (e.g. (Delta (x) id)).
TensorElement replace_factor(const TensorElement& t, std::size_t index,
                             const std::function<TensorElement(const Monomial&)>& basis_image);

/// Removes tensor factor `index` by a scalar-valued linear map (e.g. (eps (x) id)).
/// Contracting the last factor of an arity-one tensor is not allowed.
TensorElement contract_factor(const TensorElement& t, std::size_t index,
                              const std::function<ScalarQ(const Monomial&)>& basis_value);

/// Arity-one tensor as an element of its only factor.
Element collapse(const TensorElement& t);
Element as_element(const TensorElement& t);

/// The flip u (x) v -> v (x) u.
TensorElement flip(const TensorElement& t);

/// Applies per-factor maps given on basis monomials. With `antilinear` the
/// tensor coefficient is conjugated once.
TensorElement map_factors(const TensorElement& t,
                          const std::vector<std::function<Element(const Monomial&)>>& basis_images,
                          bool antilinear = false);

}  // namespace qtri
