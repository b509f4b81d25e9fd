#pragma once

// JSON forms.
//   scalar:  [[exponent, re_num, re_den, im_num, im_den], ...]
//   element: [[exponent-vector, scalar], ...]
//   algebra: {"names": [...], "invertible": [...], "M": [[...], ...]}
// Big integers are written as strings when they do not fit in 64 bits.

#include "qtri/autos.hpp"
#include "qtri/lattice.hpp"
#include "qtri/qalgebra.hpp"
#include "qtri/structure.hpp"
#include "qtri/tensor.hpp"

#include <json.hpp>

namespace qtri {

using Json = nlohmann::json;

Json to_json(const ScalarQ& s);
Json to_json(const Element& e);
Json to_json(const TensorElement& t);
Json to_json(const QAlgebra& alg);
Json to_json(const CheckReport& r);
Json to_json(const CenterLattice& c);
Json to_json(const Sextuple& s);

/// All readers throw std::invalid_argument on malformed input.
ScalarQ scalar_from_json(const Json& j);
Element element_from_json(const Json& j, const AlgebraPtr& alg);
AlgebraPtr algebra_from_json(const Json& j);

}  // namespace qtri
