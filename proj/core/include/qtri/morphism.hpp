#pragma once

// Extension of generator images to (anti)multiplicative, (anti)linear maps out
// of a q-commutative algebra. Targets: Element, TensorElement or ScalarQ.

#include "qtri/qalgebra.hpp"
#include "qtri/tensor.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtri {

enum class Multiplicativity { morphism, antimorphism };
enum class Linearity { linear, antilinear };

class PointCheckError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Element unit_like(const Element& e) { return Element::one(e.algebra()); }
inline TensorElement unit_like(const TensorElement& t) { return TensorElement::one(t.factors()); }
inline ScalarQ unit_like(const ScalarQ&) { return ScalarQ(1); }

struct RelationFailure {
    std::size_t a;
    std::size_t b;
    /// true when an invertible generator has a non-unit image.
    bool not_unit = false;
};

/// First generator pair whose images violate
/// img[a] img[b] = q^{+-M[a][b]} img[b] img[a] (minus sign for antimorphisms),
/// or an invertible generator whose image is not a unit.
template <class V>
std::optional<RelationFailure> relation_failure(const std::vector<V>& images, const QAlgebra& alg,
                                                Multiplicativity mult = Multiplicativity::morphism) {
    if (images.size() != alg.size()) throw std::invalid_argument("one image per generator required");
    for (std::size_t g = 0; g < alg.size(); ++g) {
        if (alg.invertible(g) && !is_unit(images[g])) return RelationFailure{g, g, true};
    }
    const int sign = mult == Multiplicativity::morphism ? 1 : -1;
    for (std::size_t a = 0; a < alg.size(); ++a) {
        for (std::size_t b = a + 1; b < alg.size(); ++b) {
            const V lhs = images[a] * images[b];
            const V rhs = ScalarQ::q_power(sign * alg.comm(a, b)) * (images[b] * images[a]);
            if (!(lhs == rhs)) return RelationFailure{a, b, false};
        }
    }
    return std::nullopt;
}

template <class V>
bool is_point(const std::vector<V>& images, const QAlgebra& alg,
              Multiplicativity mult = Multiplicativity::morphism) {
    return !relation_failure(images, alg, mult).has_value();
}

/// Generator images plus flags. Construction runs the point check and throws
/// PointCheckError when the images do not define a map.
template <class V>
class MorphismSpec {
public:
    MorphismSpec(AlgebraPtr source, std::vector<V> images,
                 Multiplicativity mult = Multiplicativity::morphism,
                 Linearity lin = Linearity::linear)
        : MorphismSpec(std::move(source), std::move(images), mult, lin, true) {}

    /// Skips the relation check (units are still required); the result is
    /// the multiplicative extension on normal forms, which need not respect
    /// the relations. Used to build deliberately broken structures.
    static MorphismSpec unchecked(AlgebraPtr source, std::vector<V> images,
                                  Multiplicativity mult = Multiplicativity::morphism,
                                  Linearity lin = Linearity::linear) {
        return MorphismSpec(std::move(source), std::move(images), mult, lin, false);
    }

private:
    MorphismSpec(AlgebraPtr source, std::vector<V> images, Multiplicativity mult, Linearity lin, bool verify)
        : source_(std::move(source)), images_(std::move(images)), mult_(mult), lin_(lin),
          one_(first_unit(images_)) {
        if (!source_) throw std::invalid_argument("morphism needs a source algebra");
        if (images_.size() != source_->size()) throw std::invalid_argument("one image per generator required");
        for (std::size_t g = 0; g < source_->size(); ++g) {
            if (source_->invertible(g) && !is_unit(images_[g]))
                throw PointCheckError("image of invertible generator " + source_->name(g) + " is not a unit");
        }
        if (!verify) {
            fill_inverses();
            return;
        }
        if (auto f = relation_failure(images_, *source_, mult_)) {
            if (f->not_unit)
                throw PointCheckError("image of invertible generator " + source_->name(f->a) +
                                      " is not a unit");
            throw PointCheckError("images violate the relation between " + source_->name(f->a) +
                                  " and " + source_->name(f->b));
        }
        fill_inverses();
    }

    void fill_inverses() {
        for (std::size_t g = 0; g < source_->size(); ++g) {
            if (source_->invertible(g)) inverses_.emplace(g, unit_inverse(images_[g]));
        }
    }

public:
    const AlgebraPtr& source() const { return source_; }
    const std::vector<V>& images() const { return images_; }
    const V& image(std::size_t g) const { return images_.at(g); }
    Multiplicativity multiplicativity() const { return mult_; }
    Linearity linearity() const { return lin_; }
    const V& one() const { return one_; }

    /// Image of a single normal-form monomial (coefficient 1).
    V apply_monomial(const Monomial& m) const {
        V acc = one_;
        const std::size_t n = source_->size();
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t g = mult_ == Multiplicativity::morphism ? step : n - 1 - step;
            const std::int64_t e = m[g];
            if (e == 0) continue;
            acc = acc * power(g, e);
        }
        return acc;
    }

    V apply(const Element& e) const {
        require_same_algebra(source_, e.algebra());
        V out = ScalarQ() * one_;
        for (const auto& [m, c] : e.terms()) {
            const ScalarQ coeff = lin_ == Linearity::linear ? c : c.conj();
            out += coeff * apply_monomial(m);
        }
        return out;
    }

    V operator()(const Element& e) const { return apply(e); }

private:
    static V first_unit(const std::vector<V>& images) {
        if (images.empty()) throw std::invalid_argument("morphism needs at least one generator");
        return unit_like(images.front());
    }

    V power(std::size_t g, std::int64_t e) const {
        const V& base = e < 0 ? inverses_.at(g) : images_[g];
        auto n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
        V result = one_;
        V b = base;
        while (n) {
            if (n & 1U) result = result * b;
            n >>= 1U;
            if (n) b = b * b;
        }
        return result;
    }

    AlgebraPtr source_;
    std::vector<V> images_;
    Multiplicativity mult_;
    Linearity lin_;
    V one_;
    std::map<std::size_t, V> inverses_;
};

template <class V>
V apply_morphism(const MorphismSpec<V>& spec, const Element& e) {
    return spec.apply(e);
}

/// outer o inner. Flags combine: two antimorphisms give a morphism, two
/// antilinear maps give a linear one.
template <class V>
MorphismSpec<V> compose(const MorphismSpec<V>& outer, const MorphismSpec<Element>& inner) {
    std::vector<V> images;
    images.reserve(inner.images().size());
    for (const auto& img : inner.images()) images.push_back(outer.apply(img));
    const bool anti = (outer.multiplicativity() == Multiplicativity::antimorphism) !=
                      (inner.multiplicativity() == Multiplicativity::antimorphism);
    const bool conj = (outer.linearity() == Linearity::antilinear) !=
                      (inner.linearity() == Linearity::antilinear);
    return MorphismSpec<V>(inner.source(), std::move(images),
                           anti ? Multiplicativity::antimorphism : Multiplicativity::morphism,
                           conj ? Linearity::antilinear : Linearity::linear);
}

}  // namespace qtri
