#include "qtri/tensor.hpp"

#include <stdexcept>

namespace qtri {

TensorElement::TensorElement(std::vector<AlgebraPtr> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("tensor needs at least one factor");
    for (const auto& f : factors_) {
        if (!f) throw std::invalid_argument("tensor factor without algebra");
    }
}

TensorElement TensorElement::one(std::vector<AlgebraPtr> factors) {
    TensorElement t(std::move(factors));
    Key key;
    for (const auto& f : t.factors_) key.emplace_back(f->size());
    t.add_term(key, ScalarQ(1));
    return t;
}

TensorElement TensorElement::pure(const std::vector<Element>& parts) {
    std::vector<AlgebraPtr> factors;
    for (const auto& p : parts) factors.push_back(p.algebra());
    TensorElement t(factors);
    // Expand the product of sums term by term.
    std::map<Key, ScalarQ> acc{{Key{}, ScalarQ(1)}};
    for (const auto& p : parts) {
        std::map<Key, ScalarQ> next;
        for (const auto& [key, c] : acc) {
            for (const auto& [m, d] : p.terms()) {
                Key k = key;
                k.push_back(m);
                next[k] += c * d;
            }
        }
        acc = std::move(next);
    }
    for (const auto& [key, c] : acc) t.add_term(key, c);
    return t;
}

bool TensorElement::is_unit() const {
    if (terms_.size() != 1) return false;
    const auto& [key, c] = *terms_.begin();
    if (!c.is_unit()) return false;
    for (std::size_t f = 0; f < arity(); ++f) {
        if (!factors_[f]->is_unit_monomial(key[f])) return false;
    }
    return true;
}

TensorElement TensorElement::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("tensor element is not a unit");
    const auto& [key, c] = *terms_.begin();
    ScalarQ coeff = c.unit_inverse();
    Key inv;
    for (std::size_t f = 0; f < arity(); ++f) {
        Monomial m = key[f].negated();
        coeff = coeff.shifted(-monomial_mul(key[f], m, *factors_[f]).qpow);
        inv.push_back(std::move(m));
    }
    TensorElement r(factors_);
    r.add_term(inv, coeff);
    return r;
}

void TensorElement::add_term(const Key& key, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorElement::require_compatible(const TensorElement& o) const {
    if (arity() != o.arity()) throw std::invalid_argument("tensor arity mismatch");
    for (std::size_t f = 0; f < arity(); ++f) require_same_algebra(factors_[f], o.factors_[f]);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    require_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    a.require_compatible(b);
    TensorElement r(a.factors_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            TensorElement::Key key;
            key.reserve(a.arity());
            std::int64_t qpow = 0;
            for (std::size_t f = 0; f < a.arity(); ++f) {
                auto prod = monomial_mul(ka[f], kb[f], *a.factors_[f]);
                qpow = detail::checked_add(qpow, prod.qpow);
                key.push_back(std::move(prod.monomial));
            }
            r.add_term(key, (ca * cb).shifted(qpow));
        }
    }
    return r;
}

TensorElement operator*(const ScalarQ& c, const TensorElement& a) {
    TensorElement r(a.factors_);
    if (c.is_zero()) return r;
    for (const auto& [k, d] : a.terms_) r.add_term(k, c * d);
    return r;
}

TensorElement operator-(const TensorElement& a) {
    TensorElement r(a.factors_);
    for (const auto& [k, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
    return r;
}

bool operator==(const TensorElement& a, const TensorElement& b) {
    if (a.arity() != b.arity()) return false;
    for (std::size_t f = 0; f < a.arity(); ++f) {
        if (!same_algebra(a.factors_[f], b.factors_[f])) return false;
    }
    return a.terms_ == b.terms_;
}

TensorElement replace_factor(const TensorElement& t, std::size_t index,
                             const std::function<TensorElement(const Monomial&)>& basis_image) {
    if (index >= t.arity()) throw std::out_of_range("tensor factor index");
    std::map<Monomial, TensorElement> cache;
    std::vector<AlgebraPtr> factors;
    std::size_t inserted = 0;
    bool have_shape = false;
    TensorElement::TermMap acc;
    for (const auto& [key, c] : t.terms()) {
        auto it = cache.find(key[index]);
        if (it == cache.end()) it = cache.emplace(key[index], basis_image(key[index])).first;
        const TensorElement& img = it->second;
        if (!have_shape) {
            factors.assign(t.factors().begin(), t.factors().begin() + static_cast<std::ptrdiff_t>(index));
            factors.insert(factors.end(), img.factors().begin(), img.factors().end());
            factors.insert(factors.end(), t.factors().begin() + static_cast<std::ptrdiff_t>(index) + 1,
                           t.factors().end());
            inserted = img.arity();
            have_shape = true;
        } else if (img.arity() != inserted) {
            throw std::invalid_argument("inconsistent image arity in replace_factor");
        }
        for (const auto& [ikey, ic] : img.terms()) {
            TensorElement::Key k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(index));
            k.insert(k.end(), ikey.begin(), ikey.end());
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(index) + 1, key.end());
            auto [pos, fresh] = acc.try_emplace(std::move(k), c * ic);
            if (!fresh) pos->second += c * ic;
        }
    }
    if (!have_shape) {
        // Zero input: probe the image shape on the identity monomial.
        TensorElement img = basis_image(Monomial(t.factors()[index]->size()));
        factors.assign(t.factors().begin(), t.factors().begin() + static_cast<std::ptrdiff_t>(index));
        factors.insert(factors.end(), img.factors().begin(), img.factors().end());
        factors.insert(factors.end(), t.factors().begin() + static_cast<std::ptrdiff_t>(index) + 1,
                       t.factors().end());
    }
    TensorElement r(factors);
    for (const auto& [k, c] : acc) r.add_term(k, c);
    return r;
}

TensorElement contract_factor(const TensorElement& t, std::size_t index,
                              const std::function<ScalarQ(const Monomial&)>& basis_value) {
    if (index >= t.arity()) throw std::out_of_range("tensor factor index");
    if (t.arity() == 1) throw std::invalid_argument("cannot contract the only tensor factor");
    std::vector<AlgebraPtr> factors = t.factors();
    factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(index));
    TensorElement r(factors);
    for (const auto& [key, c] : t.terms()) {
        ScalarQ v = basis_value(key[index]);
        if (v.is_zero()) continue;
        TensorElement::Key k = key;
        k.erase(k.begin() + static_cast<std::ptrdiff_t>(index));
        r.add_term(k, c * v);
    }
    return r;
}

Element collapse(const TensorElement& t) {
    if (t.arity() != 1) throw std::invalid_argument("collapse needs an arity-one tensor");
    Element e(t.factors()[0]);
    for (const auto& [key, c] : t.terms()) e.add_term(key[0], c);
    return e;
}

Element as_element(const TensorElement& t) { return collapse(t); }

TensorElement flip(const TensorElement& t) {
    if (t.arity() != 2) throw std::invalid_argument("flip needs an arity-two tensor");
    TensorElement r({t.factors()[1], t.factors()[0]});
    for (const auto& [key, c] : t.terms()) r.add_term({key[1], key[0]}, c);
    return r;
}

TensorElement map_factors(const TensorElement& t,
                          const std::vector<std::function<Element(const Monomial&)>>& basis_images,
                          bool antilinear) {
    if (basis_images.size() != t.arity()) throw std::invalid_argument("one map per tensor factor required");
    std::vector<std::map<Monomial, Element>> cache(t.arity());
    auto image = [&](std::size_t f, const Monomial& m) -> const Element& {
        auto it = cache[f].find(m);
        if (it == cache[f].end()) it = cache[f].emplace(m, basis_images[f](m)).first;
        return it->second;
    };

    std::vector<AlgebraPtr> factors;
    TensorElement::TermMap acc;
    for (const auto& [key, c] : t.terms()) {
        std::vector<Element> parts;
        for (std::size_t f = 0; f < t.arity(); ++f) parts.push_back(image(f, key[f]));
        if (factors.empty()) {
            for (const auto& p : parts) factors.push_back(p.algebra());
        }
        TensorElement piece = TensorElement::pure(parts);
        const ScalarQ coeff = antilinear ? c.conj() : c;
        for (const auto& [k, d] : piece.terms()) {
            auto [pos, fresh] = acc.try_emplace(k, coeff * d);
            if (!fresh) pos->second += coeff * d;
        }
    }
    if (factors.empty()) {
        for (std::size_t f = 0; f < t.arity(); ++f)
            factors.push_back(basis_images[f](Monomial(t.factors()[f]->size())).algebra());
    }
    TensorElement r(factors);
    for (const auto& [k, c] : acc) r.add_term(k, c);
    return r;
}

}  // namespace qtri
