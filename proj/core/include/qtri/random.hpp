#pragma once

// Seeded random elements for property checks.

#include "qtri/coeff.hpp"
#include "qtri/qalgebra.hpp"

#include <cstdint>
#include <random>

namespace qtri {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// Nonzero Gaussian rational from a small pool.
    GaussianRational coefficient();
    /// c q^k with k in [-2, 2]: always a unit of the scalar ring.
    ScalarQ unit_scalar();
    /// Up to three terms.
    ScalarQ scalar();
    /// At most `max_terms` terms; exponents in [-2, 2] on invertible
    /// generators and in [0, 3] otherwise.
    Element element(const AlgebraPtr& alg, int max_terms = 4);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace qtri
