#include "qtri/random.hpp"

#include <array>

namespace qtri {

namespace {

constexpr std::array<std::array<int, 4>, 10> kPool{{
    {1, 1, 0, 1},
    {-1, 1, 0, 1},
    {2, 1, 0, 1},
    {1, 2, 0, 1},
    {-3, 4, 0, 1},
    {0, 1, 1, 1},
    {0, 1, -2, 3},
    {1, 1, 1, 1},
    {2, 3, -1, 2},
    {5, 1, 0, 1},
}};

}  // namespace

std::int64_t RandomSource::uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

GaussianRational RandomSource::coefficient() {
    const auto& c = kPool[static_cast<std::size_t>(uniform(0, kPool.size() - 1))];
    return GaussianRational::from_fractions(c[0], c[1], c[2], c[3]);
}

ScalarQ RandomSource::unit_scalar() { return {coefficient(), uniform(-2, 2)}; }

ScalarQ RandomSource::scalar() {
    ScalarQ s;
    const auto terms = uniform(1, 3);
    for (std::int64_t k = 0; k < terms; ++k) s.add_term(uniform(-2, 2), coefficient());
    return s.is_zero() ? ScalarQ(1) : s;
}

Element RandomSource::element(const AlgebraPtr& alg, int max_terms) {
    Element e(alg);
    const auto terms = uniform(1, max_terms);
    for (std::int64_t k = 0; k < terms; ++k) {
        Monomial m(alg->size());
        for (std::size_t g = 0; g < alg->size(); ++g) {
            // Keep monomials sparse so products stay small.
            if (uniform(0, 2) != 0) continue;
            m[g] = alg->invertible(g) ? uniform(-2, 2) : uniform(0, 3);
        }
        e.add_term(m, ScalarQ(coefficient(), uniform(-2, 2)));
    }
    return e;
}

}  // namespace qtri
