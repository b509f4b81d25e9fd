#include "qtri/autos.hpp"

#include "qtri/expr.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

namespace qtri {

using detail::checked_add;
using detail::checked_mul;

Sextuple::Sextuple(ScalarQ l12_, ScalarQ l11_, ScalarQ l22_, std::int64_t j_, std::int64_t k_, std::int64_t l_)
    : l12(std::move(l12_)), l11(std::move(l11_)), l22(std::move(l22_)), j(j_), k(k_), l(l_) {
    if (!l12.is_unit() || !l11.is_unit() || !l22.is_unit())
        throw std::invalid_argument("sextuple scalars must be units");
}

const TriangularAlgebra& ut2() {
    static const TriangularAlgebra alg(2, true);
    return alg;
}

const TriangularAlgebra& t2() {
    static const TriangularAlgebra alg(2, false);
    return alg;
}

MorphismSpec<Element> g_to_endo(const Sextuple& s) {
    const auto& u = ut2();
    const Element zj = u.z().pow(s.j);
    std::vector<Element> images(3, u.one());
    images[u.index(1, 1)] = s.l11 * (zj * u.a(1, 1));
    images[u.index(1, 2)] = s.l12 * (u.a(1, 1, s.k) * u.a(2, 2, s.l) * u.a(1, 2));
    images[u.index(2, 2)] = s.l22 * (zj * u.a(2, 2));
    return {u.algebra(), std::move(images)};
}

Sextuple g_compose(const Sextuple& s1, const Sextuple& s2) {
    const ScalarQ ratio = (s1.l11 * s1.l22.unit_inverse()).pow(s2.j);
    const std::int64_t shift = checked_mul(s1.j, checked_add(s2.k, s2.l));
    return {s1.l12 * s2.l12 * s1.l11.pow(s2.k) * s1.l22.pow(s2.l),
            s1.l11 * s2.l11 * ratio,
            s1.l22 * s2.l22 * ratio,
            checked_add(s1.j, s2.j),
            checked_add(checked_add(s1.k, s2.k), shift),
            checked_add(s1.l, s2.l) - shift};
}

Sextuple g_inverse(const Sextuple& s) {
    const std::int64_t m = checked_mul(s.j, checked_add(s.k, s.l));
    const ScalarQ ratio = (s.l11 * s.l22.unit_inverse()).pow(s.j);
    return {s.l12.unit_inverse() * s.l11.pow(s.k - m) * s.l22.pow(checked_add(s.l, m)),
            s.l11.unit_inverse() * ratio,
            s.l22.unit_inverse() * ratio,
            -s.j,
            m - s.k,
            -m - s.l};
}

Sextuple rho_conjugate(const Sextuple& s) { return {s.l12, s.l22, s.l11, -s.j, s.l, s.k}; }

std::tuple<Sextuple, Sextuple, Sextuple> g_decompose(const Sextuple& s) {
    const std::int64_t m = checked_mul(s.j, checked_add(s.k, s.l));
    return {Sextuple(ScalarQ(1), ScalarQ(1), ScalarQ(1), s.j, 0, 0),
            Sextuple(ScalarQ(1), ScalarQ(1), ScalarQ(1), 0, s.k - m, checked_add(s.l, m)),
            Sextuple(s.l12, s.l11, s.l22, 0, 0, 0)};
}

bool is_hopf_auto(const Sextuple& s) { return s.l11.is_one() && s.l22.is_one() && s.k == s.j && s.l == -s.j; }

bool hopf_compatible(const MorphismSpec<Element>& phi, const TriangularAlgebra& alg) {
    const auto& delta = alg.coproduct_spec();
    const auto& eps = alg.counit_spec();
    auto basis = [&phi](const Monomial& m) { return phi.apply_monomial(m); };
    const std::vector<std::function<Element(const Monomial&)>> both{basis, basis};
    for (std::size_t g = 0; g < alg.generator_count(); ++g) {
        const Element gen = Element::generator(alg.algebra(), g);
        if (map_factors(delta.apply(gen), both) != delta.apply(phi.apply(gen))) return false;
        if (eps.apply(phi.apply(gen)) != eps.apply(gen)) return false;
    }
    return true;
}

bool same_images(const MorphismSpec<Element>& a, const MorphismSpec<Element>& b) {
    return same_algebra(a.source(), b.source()) && a.images() == b.images();
}

namespace {

std::vector<std::string_view> split_fields(std::string_view body) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t p = 0; p < body.size(); ++p) {
        if (body[p] == '(') ++depth;
        if (body[p] == ')') --depth;
        if (body[p] == ',' && depth == 0) {
            out.push_back(body.substr(start, p - start));
            start = p + 1;
        }
    }
    out.push_back(body.substr(start));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Sextuple parse_sextuple(std::string_view text) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("sextuple must look like [l12,l11,l22,j,k,l]");
    const auto fields = split_fields(text.substr(1, text.size() - 2));
    if (fields.size() != 6) throw std::invalid_argument("sextuple needs six entries");
    std::array<ScalarQ, 3> lambdas;
    for (std::size_t f = 0; f < 3; ++f) {
        try {
            lambdas[f] = parse_scalar(fields[f]);
        } catch (const ExprError& e) {
            throw std::invalid_argument("bad scalar '" + std::string(trim(fields[f])) + "': " + e.what());
        }
    }
    return {lambdas[0], lambdas[1], lambdas[2], parse_int(fields[3]), parse_int(fields[4]), parse_int(fields[5])};
}

std::string format(const Sextuple& s) {
    return "[" + s.l12.to_string() + "," + s.l11.to_string() + "," + s.l22.to_string() + "," +
           std::to_string(s.j) + "," + std::to_string(s.k) + "," + std::to_string(s.l) + "]";
}

Sextuple random_sextuple(RandomSource& rng, std::int64_t range) {
    return {rng.unit_scalar(), rng.unit_scalar(), rng.unit_scalar(),
            rng.uniform(-range, range), rng.uniform(-range, range), rng.uniform(-range, range)};
}

ScalarQ determinant(const Matrix2& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
    Matrix2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
    return out;
}

LinearAuto2 operator*(const LinearAuto2& x, const LinearAuto2& y) { return {x.lambda * y.lambda, x.a * y.a}; }

MorphismSpec<Element> linear_auto_spec(const LinearAuto2& phi) {
    if (phi.lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
    if (determinant(phi.a).is_zero()) throw std::invalid_argument("matrix is singular");
    const auto& t = t2();
    std::vector<Element> images(3, t.one());
    images[t.index(1, 1)] = phi.a[0][0] * t.a(1, 1) + phi.a[1][0] * t.a(2, 2);
    images[t.index(1, 2)] = phi.lambda * t.a(1, 2);
    images[t.index(2, 2)] = phi.a[0][1] * t.a(1, 1) + phi.a[1][1] * t.a(2, 2);
    return {t.algebra(), std::move(images)};
}

}  // namespace qtri
