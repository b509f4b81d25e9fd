#pragma once

// Text syntax for elements of T_q(n) / UT_q(n).
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' int)? | '-' factor
//   atom   := rational | 'i' | 'q' | 'a' '[' int ',' int ']' | 't' | 'det' | 'z' | '(' expr ')'

#include "qtri/qalgebra.hpp"
#include "qtri/tensor.hpp"
#include "qtri/triangular.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtri {

class ExprError : public std::runtime_error {
public:
    ExprError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Malformed input.
class ParseError : public ExprError {
public:
    using ExprError::ExprError;
};

/// Well-formed input that has no value in the target algebra.
class EvalError : public ExprError {
public:
    using ExprError::ExprError;
};

struct ExprAst {
    enum class Kind { number, imaginary, q, generator, t, det, z, sum, difference, product, power, negation, group };

    Kind kind;
    std::size_t position = 0;
    mpq_class number;          // number
    int row = 0, column = 0;   // generator
    std::int64_t exponent = 0; // power
    std::vector<std::unique_ptr<ExprAst>> children;
};

using ExprPtr = std::unique_ptr<ExprAst>;

/// Throws ParseError with the offending position.
ExprPtr parse_expr(std::string_view text);

/// Throws EvalError for out-of-range generators, negative powers of non-units
/// and t or z in T_q(n).
Element evaluate(const ExprAst& ast, const TriangularAlgebra& alg);
/// Expressions without generators.
ScalarQ evaluate_scalar(const ExprAst& ast);

Element parse(std::string_view text, const TriangularAlgebra& alg);
ScalarQ parse_scalar(std::string_view text);

/// Canonical text: terms by descending exponent vector, coefficients before
/// monomials, "0" for zero. parse(format(e)) == e.
std::string format(const Element& e);
std::string format(const ScalarQ& s);
std::string format(const TensorElement& t);

}  // namespace qtri
