#include "qtri/qalgebra.hpp"

#include <stdexcept>

namespace qtri {

Monomial Monomial::unit_vector(std::size_t size, std::size_t index, std::int64_t power) {
    Monomial m(size);
    m.exponents.at(index) = power;
    return m;
}

bool Monomial::is_identity() const {
    for (auto e : exponents) {
        if (e != 0) return false;
    }
    return true;
}

Monomial Monomial::negated() const {
    Monomial m(size());
    for (std::size_t i = 0; i < size(); ++i) m[i] = detail::checked_mul(exponents[i], -1);
    return m;
}

QAlgebra::QAlgebra(std::vector<std::string> names, std::vector<bool> invertible, IntMatrix comm)
    : names_(std::move(names)), invertible_(std::move(invertible)), comm_(std::move(comm)) {
    const std::size_t n = names_.size();
    if (invertible_.size() != n || comm_.size() != n)
        throw std::invalid_argument("presentation size mismatch");
    for (std::size_t a = 0; a < n; ++a) {
        if (comm_[a].size() != n) throw std::invalid_argument("commutation matrix is not square");
        if (comm_[a][a] != 0) throw std::invalid_argument("commutation matrix has nonzero diagonal");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (comm_[a][b] != -comm_[b][a])
                throw std::invalid_argument("commutation matrix is not antisymmetric");
        }
    }
}

bool QAlgebra::admissible(const Monomial& m) const {
    if (m.size() != size()) return false;
    for (std::size_t g = 0; g < size(); ++g) {
        if (m[g] < 0 && !invertible_[g]) return false;
    }
    return true;
}

bool QAlgebra::is_unit_monomial(const Monomial& m) const {
    if (m.size() != size()) return false;
    for (std::size_t g = 0; g < size(); ++g) {
        if (m[g] != 0 && !invertible_[g]) return false;
    }
    return true;
}

AlgebraPtr quantum_affine_space(int n, const std::string& prefix) {
    if (n < 1) throw std::invalid_argument("quantum affine space needs n >= 1");
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(prefix + "[" + std::to_string(i) + "]");
    IntMatrix comm(size, std::vector<int>(size, 0));
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            if (a > b) comm[a][b] = 1;
            if (a < b) comm[a][b] = -1;
        }
    }
    return std::make_shared<const QAlgebra>(std::move(names), std::vector<bool>(size, false),
                                            std::move(comm));
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!same_algebra(a, b)) throw std::invalid_argument("algebra mismatch");
}

MonomialProduct monomial_mul(const Monomial& alpha, const Monomial& beta, const QAlgebra& alg) {
    const std::size_t n = alg.size();
    if (alpha.size() != n || beta.size() != n) throw std::invalid_argument("monomial size mismatch");
    std::int64_t qpow = 0;
    // Moving each x_b of beta leftwards past the x_a of alpha with a > b.
    std::int64_t suffix = 0;  // sum_{a > b} alpha_a M[a][b], accumulated per b
    for (std::size_t b = 0; b < n; ++b) {
        if (beta[b] == 0) continue;
        suffix = 0;
        for (std::size_t a = b + 1; a < n; ++a) {
            if (alpha[a] != 0 && alg.comm(a, b) != 0)
                suffix = detail::checked_add(suffix, detail::checked_mul(alpha[a], alg.comm(a, b)));
        }
        qpow = detail::checked_add(qpow, detail::checked_mul(suffix, beta[b]));
    }
    Monomial gamma(n);
    for (std::size_t g = 0; g < n; ++g) gamma[g] = detail::checked_add(alpha[g], beta[g]);
    return {qpow, std::move(gamma)};
}

// ---------------------------------------------------------------------------
// Element
// ---------------------------------------------------------------------------

Element::Element(AlgebraPtr alg) : alg_(std::move(alg)) {
    if (!alg_) throw std::invalid_argument("element needs an algebra");
}

Element Element::scalar(AlgebraPtr alg, const ScalarQ& c) {
    Element e(std::move(alg));
    e.add_term(Monomial(e.alg_->size()), c);
    return e;
}

Element Element::monomial(AlgebraPtr alg, Monomial m, const ScalarQ& c) {
    Element e(std::move(alg));
    if (!e.alg_->admissible(m)) throw std::domain_error("monomial is not admissible in this algebra");
    e.add_term(m, c);
    return e;
}

Element Element::generator(AlgebraPtr alg, std::size_t g, std::int64_t power) {
    const auto size = alg->size();
    return monomial(std::move(alg), Monomial::unit_vector(size, g, power));
}

bool Element::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& [m, c] = *terms_.begin();
    return c.is_unit() && alg_->is_unit_monomial(m);
}

Element Element::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("element is not a unit");
    const auto& [m, c] = *terms_.begin();
    // (c x^mu)^{-1} = c^{-1} q^{s} x^{-mu} where x^mu x^{-mu} = q^{s'} and s = -s'.
    Monomial inv = m.negated();
    auto prod = monomial_mul(m, inv, *alg_);
    Element r(alg_);
    r.add_term(inv, c.unit_inverse().shifted(-prod.qpow));
    return r;
}

Element Element::pow(std::int64_t e) const {
    if (e < 0) {
        if (e == INT64_MIN) throw std::overflow_error("exponent overflow");
        return unit_inverse().pow(-e);
    }
    Element base = *this;
    Element result = one(alg_);
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

ScalarQ Element::constant_term() const {
    auto it = terms_.find(Monomial(alg_->size()));
    return it == terms_.end() ? ScalarQ() : it->second;
}

Element Element::conj_coefficients() const {
    Element r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, c.conj());
    return r;
}

void Element::add_term(const Monomial& m, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o) {
    require_same_algebra(alg_, o.alg_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_algebra(alg_, o.alg_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    require_same_algebra(a.alg_, b.alg_);
    Element r(a.alg_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = monomial_mul(ma, mb, *a.alg_);
            r.add_term(prod.monomial, (ca * cb).shifted(prod.qpow));
        }
    }
    return r;
}

Element operator*(const ScalarQ& c, const Element& a) {
    Element r(a.alg_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : a.terms_) r.add_term(m, c * coeff);
    return r;
}

Element operator-(const Element& a) {
    Element r(a.alg_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
    return r;
}

bool operator==(const Element& a, const Element& b) {
    return same_algebra(a.alg_, b.alg_) && a.terms_ == b.terms_;
}

}  // namespace qtri
