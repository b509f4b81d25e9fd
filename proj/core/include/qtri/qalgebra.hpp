#pragma once

// Multiparameter q-commutative algebras A_N(Q) whose commutation scalars are
// powers of q, with their PBW normal forms.

#include "qtri/coeff.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qtri {

using IntMatrix = std::vector<std::vector<int>>;

/// Exponent vector of a PBW monomial x_1^{e_1} ... x_N^{e_N}.
struct Monomial {
    std::vector<std::int64_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t size) : exponents(size, 0) {}
    explicit Monomial(std::vector<std::int64_t> e) : exponents(std::move(e)) {}

    static Monomial unit_vector(std::size_t size, std::size_t index, std::int64_t power = 1);

    std::size_t size() const { return exponents.size(); }
    std::int64_t operator[](std::size_t i) const { return exponents[i]; }
    std::int64_t& operator[](std::size_t i) { return exponents[i]; }
    bool is_identity() const;
    Monomial negated() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Presentation of a q-commutative algebra: ordered generators, invertibility
/// flags, and an antisymmetric exponent matrix M with the convention
/// gen_a * gen_b = q^{M[a][b]} gen_b * gen_a.
class QAlgebra {
public:
    /// Throws std::invalid_argument on shape mismatch or a non-antisymmetric M.
    QAlgebra(std::vector<std::string> names, std::vector<bool> invertible, IntMatrix comm);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t g) const { return names_[g]; }
    const std::vector<std::string>& names() const { return names_; }
    bool invertible(std::size_t g) const { return invertible_[g]; }
    const std::vector<bool>& invertibility() const { return invertible_; }
    int comm(std::size_t a, std::size_t b) const { return comm_[a][b]; }
    const IntMatrix& comm_matrix() const { return comm_; }

    /// Non-invertible generators carry nonnegative exponents.
    bool admissible(const Monomial& m) const;
    /// Admissible and supported on invertible generators only.
    bool is_unit_monomial(const Monomial& m) const;

    friend bool operator==(const QAlgebra&, const QAlgebra&) = default;

private:
    std::vector<std::string> names_;
    std::vector<bool> invertible_;
    IntMatrix comm_;
};

using AlgebraPtr = std::shared_ptr<const QAlgebra>;

/// Uniparameter quantum affine space A_n(q): x_i x_j = q x_j x_i for i > j.
AlgebraPtr quantum_affine_space(int n, const std::string& prefix = "x");

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

struct MonomialProduct {
    std::int64_t qpow;
    Monomial monomial;
};

/// x^alpha * x^beta = q^{qpow} x^{alpha+beta},
/// qpow = sum_{a>b} alpha_a beta_b M[a][b]. Throws std::overflow_error.
MonomialProduct monomial_mul(const Monomial& alpha, const Monomial& beta, const QAlgebra& alg);

/// A finite linear combination of normal-form monomials.
class Element {
public:
    using TermMap = std::map<Monomial, ScalarQ>;

    explicit Element(AlgebraPtr alg);

    static Element scalar(AlgebraPtr alg, const ScalarQ& c);
    static Element one(AlgebraPtr alg) { return scalar(std::move(alg), ScalarQ(1)); }
    static Element monomial(AlgebraPtr alg, Monomial m, const ScalarQ& c = ScalarQ(1));
    static Element generator(AlgebraPtr alg, std::size_t g, std::int64_t power = 1);

    const AlgebraPtr& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Nonzero scalar unit times a monomial in invertible generators.
    bool is_unit() const;
    /// Symbolic inverse of a unit; throws std::domain_error otherwise.
    Element unit_inverse() const;
    Element pow(std::int64_t e) const;
    /// Coefficient of the empty monomial.
    ScalarQ constant_term() const;
    /// Conjugates every coefficient, leaving monomials alone.
    Element conj_coefficients() const;

    void add_term(const Monomial& m, const ScalarQ& c);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Element& o) { return *this = *this * o; }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const ScalarQ& c, const Element& a);
    friend Element operator-(const Element& a);
    friend bool operator==(const Element& a, const Element& b);

private:
    AlgebraPtr alg_;
    TermMap terms_;
};

inline bool is_unit(const Element& e) { return e.is_unit(); }
inline Element unit_inverse(const Element& e) { return e.unit_inverse(); }
inline bool is_unit(const ScalarQ& s) { return s.is_unit(); }
inline ScalarQ unit_inverse(const ScalarQ& s) { return s.unit_inverse(); }

/// Throws std::invalid_argument when the algebras differ.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace qtri
