#include "qtri/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace qtri {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static ExprPtr node(ExprAst::Kind kind, std::size_t position) {
        auto n = std::make_unique<ExprAst>();
        n->kind = kind;
        n->position = position;
        return n;
    }

    static ExprPtr binary(ExprAst::Kind kind, std::size_t position, ExprPtr lhs, ExprPtr rhs) {
        auto n = node(kind, position);
        n->children.push_back(std::move(lhs));
        n->children.push_back(std::move(rhs));
        return n;
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (peek('+')) {
                ++pos_;
                lhs = binary(ExprAst::Kind::sum, at, std::move(lhs), term());
            } else if (peek('-')) {
                ++pos_;
                lhs = binary(ExprAst::Kind::difference, at, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            skip();
            const std::size_t at = pos_;
            if (!peek('*')) return lhs;
            ++pos_;
            lhs = binary(ExprAst::Kind::product, at, std::move(lhs), factor());
        }
    }

    ExprPtr factor() {
        skip();
        const std::size_t at = pos_;
        if (peek('-')) {
            ++pos_;
            auto n = node(ExprAst::Kind::negation, at);
            n->children.push_back(factor());
            return n;
        }
        ExprPtr base = atom();
        skip();
        if (peek('^')) {
            const std::size_t caret = pos_;
            ++pos_;
            auto n = node(ExprAst::Kind::power, caret);
            n->exponent = signed_integer();
            n->children.push_back(std::move(base));
            return n;
        }
        return base;
    }

    mpz_class digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    std::int64_t signed_integer() {
        skip();
        bool negative = false;
        if (peek('-')) {
            negative = true;
            ++pos_;
        }
        const std::size_t at = pos_;
        mpz_class v = digits();
        if (negative) v = -v;
        if (!v.fits_slong_p()) throw ParseError("integer out of range", at);
        return v.get_si();
    }

    int index_value() {
        const std::size_t at = pos_;
        mpz_class v = digits();
        if (!v.fits_sint_p()) throw ParseError("index out of range", at);
        return static_cast<int>(v.get_si());
    }

    bool keyword(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        const std::size_t end = pos_ + word.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    ExprPtr atom() {
        skip();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = node(ExprAst::Kind::number, at);
            mpz_class num = digits();
            mpz_class den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t den_at = pos_;
                den = digits();
                if (sgn(den) == 0) throw ParseError("zero denominator", den_at);
            }
            n->number = mpq_class(num, den);
            n->number.canonicalize();
            return n;
        }
        if (c == '(') {
            ++pos_;
            auto n = node(ExprAst::Kind::group, at);
            n->children.push_back(expr());
            expect(')');
            return n;
        }
        if (keyword("det")) return node(ExprAst::Kind::det, at);
        if (keyword("i")) return node(ExprAst::Kind::imaginary, at);
        if (keyword("q")) return node(ExprAst::Kind::q, at);
        if (keyword("t")) return node(ExprAst::Kind::t, at);
        if (keyword("z")) return node(ExprAst::Kind::z, at);
        if (c == 'a') {
            ++pos_;
            auto n = node(ExprAst::Kind::generator, at);
            expect('[');
            n->row = index_value();
            expect(',');
            n->column = index_value();
            expect(']');
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

template <class V, class Leaf>
V fold(const ExprAst& ast, const Leaf& leaf, const V& one) {
    using K = ExprAst::Kind;
    switch (ast.kind) {
        case K::sum:
            return fold<V>(*ast.children[0], leaf, one) + fold<V>(*ast.children[1], leaf, one);
        case K::difference:
            return fold<V>(*ast.children[0], leaf, one) - fold<V>(*ast.children[1], leaf, one);
        case K::product:
            return fold<V>(*ast.children[0], leaf, one) * fold<V>(*ast.children[1], leaf, one);
        case K::negation:
            return -fold<V>(*ast.children[0], leaf, one);
        case K::group:
            return fold<V>(*ast.children[0], leaf, one);
        case K::power: {
            V base = fold<V>(*ast.children[0], leaf, one);
            if (ast.exponent < 0 && !is_unit(base))
                throw EvalError("negative power of a non-unit", ast.position);
            try {
                return base.pow(ast.exponent);
            } catch (const std::overflow_error&) {
                throw EvalError("exponent overflow", ast.position);
            }
        }
        default:
            return leaf(ast);
    }
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).run(); }

Element evaluate(const ExprAst& ast, const TriangularAlgebra& alg) {
    auto leaf = [&alg](const ExprAst& node) -> Element {
        using K = ExprAst::Kind;
        switch (node.kind) {
            case K::number:
                return alg.scalar(ScalarQ(GaussianRational(node.number)));
            case K::imaginary:
                return alg.scalar(ScalarQ::imaginary_unit());
            case K::q:
                return alg.scalar(ScalarQ::q());
            case K::generator:
                if (!alg.valid(node.row, node.column))
                    throw EvalError("no generator a[" + std::to_string(node.row) + "," +
                                        std::to_string(node.column) + "] for n = " + std::to_string(alg.n()),
                                    node.position);
                return alg.a(node.row, node.column);
            case K::det:
                return alg.det();
            case K::t:
                if (!alg.localized()) throw EvalError("t needs the localized algebra", node.position);
                return alg.t();
            case K::z:
                if (!alg.localized()) throw EvalError("z needs the localized algebra", node.position);
                return alg.z();
            default:
                throw std::logic_error("unhandled expression node");
        }
    };
    return fold<Element>(ast, leaf, alg.one());
}

ScalarQ evaluate_scalar(const ExprAst& ast) {
    auto leaf = [](const ExprAst& node) -> ScalarQ {
        using K = ExprAst::Kind;
        switch (node.kind) {
            case K::number:
                return ScalarQ(GaussianRational(node.number));
            case K::imaginary:
                return ScalarQ::imaginary_unit();
            case K::q:
                return ScalarQ::q();
            default:
                throw EvalError("expected a scalar", node.position);
        }
    };
    return fold<ScalarQ>(ast, leaf, ScalarQ(1));
}

Element parse(std::string_view text, const TriangularAlgebra& alg) { return evaluate(*parse_expr(text), alg); }

ScalarQ parse_scalar(std::string_view text) { return evaluate_scalar(*parse_expr(text)); }

namespace {

bool reads_negative(const GaussianRational& c) {
    return (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

std::string monomial_text(const std::vector<std::int64_t>& exps, const QAlgebra& alg) {
    std::string out;
    for (std::size_t g = 0; g < exps.size(); ++g) {
        if (exps[g] == 0) continue;
        if (!out.empty()) out += "*";
        out += alg.name(g);
        if (exps[g] != 1) out += "^" + std::to_string(exps[g]);
    }
    return out;
}

// One signed term: returns {negative, body}.
std::pair<bool, std::string> term_text(const ScalarQ& c, const std::string& mono, bool alone) {
    if (c.terms().size() > 1) {
        const std::string s = c.to_string();
        if (mono.empty()) return {false, alone ? s : "(" + s + ")"};
        return {false, "(" + s + ")*" + mono};
    }
    const auto& [k, coeff] = *c.terms().begin();
    const bool negative = reads_negative(coeff);
    const ScalarQ mag(negative ? -coeff : coeff, k);
    if (mono.empty()) return {negative, mag.to_string()};
    if (mag.is_one()) return {negative, mono};
    return {negative, mag.to_string() + "*" + mono};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n) {
        const auto& [negative, body] = terms[n];
        if (n == 0) {
            out += negative ? "- " : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

}  // namespace

std::string format(const Element& e) {
    std::vector<std::pair<bool, std::string>> terms;
    const bool alone = e.term_count() == 1;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        terms.push_back(term_text(it->second, monomial_text(it->first.exponents, *e.algebra()), alone));
    }
    return join_terms(terms);
}

std::string format(const ScalarQ& s) { return s.to_string(); }

std::string format(const TensorElement& t) {
    std::vector<std::pair<bool, std::string>> terms;
    for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it) {
        std::string mono;
        for (std::size_t f = 0; f < t.arity(); ++f) {
            std::string part = monomial_text(it->first[f].exponents, *t.factors()[f]);
            if (f) mono += " ⊗ ";
            mono += part.empty() ? "1" : part;
        }
        terms.push_back(term_text(it->second, mono, false));
    }
    return join_terms(terms);
}

}  // namespace qtri
