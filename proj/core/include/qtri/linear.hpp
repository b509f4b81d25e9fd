#pragma once

#include "qtri/coeff.hpp"

#include <vector>

namespace qtri {

using ScalarMatrix = std::vector<std::vector<ScalarQ>>;

/// Rank over the fraction field of the Laurent ring, by fraction-free
/// (Bareiss) elimination with exact divisions.
std::size_t rank(ScalarMatrix m);

}  // namespace qtri
