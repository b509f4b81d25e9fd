#include "qtri/triangular.hpp"

#include <stdexcept>
#include <string>

namespace qtri {

namespace {

// Each family is stated for an ordered pair (x, y) as a_x a_y = q^c a_y a_x.
std::optional<int> match_family(TriIndex x, TriIndex y, int family) {
    switch (family) {
        case 0:  // same column: a_jk a_ik = q a_ik a_jk, i < j
            if (x.j == y.j && y.i < x.i) return 1;
            break;
        case 1:  // same row: a_jk a_jl = q a_jl a_jk, k < l
            if (x.i == y.i && x.j < y.j) return 1;
            break;
        case 2:  // a_ik a_jl = a_jl a_ik, i < j, k < l
            if (x.i < y.i && x.j < y.j) return 0;
            break;
        case 3:  // a_jk a_il = q^2 a_il a_jk, i < j <= k < l
            if (y.i < x.i && x.j < y.j) return 2;
            break;
        default:
            break;
    }
    return std::nullopt;
}

std::string label(TriIndex p) { return "a[" + std::to_string(p.i) + "," + std::to_string(p.j) + "]"; }

}  // namespace

int comm_exponent(TriIndex p, TriIndex r, int n) {
    auto valid = [n](TriIndex x) { return 1 <= x.i && x.i <= x.j && x.j <= n; };
    if (!valid(p) || !valid(r)) throw std::out_of_range("triangular index out of range");
    if (p == r) throw std::invalid_argument("comm_exponent needs distinct generators");
    int matches = 0;
    int e = 0;
    for (int family = 0; family < 4; ++family) {
        if (auto c = match_family(p, r, family)) {
            ++matches;
            e = *c;
        }
        if (auto c = match_family(r, p, family)) {
            ++matches;
            e = -*c;
        }
    }
    if (matches != 1)
        throw std::logic_error(std::to_string(matches) + " relation families match " + label(p) + ", " +
                               label(r));
    return e;
}

AlgebraPtr triangular_presentation(int n, bool localized) {
    if (n < 2) throw std::invalid_argument("triangular algebras need n >= 2");
    std::vector<TriIndex> order;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) order.push_back({i, j});
    }
    const std::size_t size = order.size();
    std::vector<std::string> names;
    std::vector<bool> invertible;
    IntMatrix comm(size, std::vector<int>(size, 0));
    for (std::size_t a = 0; a < size; ++a) {
        names.push_back(label(order[a]));
        invertible.push_back(localized && order[a].i == order[a].j);
        for (std::size_t b = 0; b < size; ++b) {
            if (a != b) comm[a][b] = comm_exponent(order[a], order[b], n);
        }
    }
    return std::make_shared<const QAlgebra>(std::move(names), std::move(invertible), std::move(comm));
}

TensorElement tensor(const Element& u, const Element& v) { return TensorElement::pure({u, v}); }

TriangularAlgebra::TriangularAlgebra(int n, bool localized)
    : n_(n), localized_(localized), alg_(triangular_presentation(n, localized)) {
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) order_.push_back({i, j});
    }

    std::vector<TensorElement> delta;
    std::vector<ScalarQ> eps;
    std::vector<Element> sigma, sigma_inv, rho;
    for (const auto& [i, j] : order_) {
        TensorElement d(std::vector<AlgebraPtr>{alg_, alg_});
        for (int k = i; k <= j; ++k) d += tensor(a(i, k), a(k, j));
        delta.push_back(std::move(d));
        eps.emplace_back(i == j ? 1 : 0);
        sigma.push_back(ScalarQ::q_power(2 * (i - j)) * a(i, j));
        sigma_inv.push_back(ScalarQ::q_power(2 * (j - i)) * a(i, j));
        rho.push_back(a(n + 1 - j, n + 1 - i));
    }
    delta_.emplace(alg_, std::move(delta));
    eps_.emplace(alg_, std::move(eps));
    sigma_.emplace(alg_, std::move(sigma));
    sigma_inv_.emplace(alg_, std::move(sigma_inv));
    rho_.emplace(alg_, rho);
    gamma_.emplace(alg_, std::move(rho), Multiplicativity::morphism, Linearity::antilinear);
    if (n % 2 == 0) theta_.emplace(alg_, theta_images());

    if (localized_) {
        std::vector<Element> s;
        const Element tt = t();
        for (const auto& [i, j] : order_) s.push_back(tt * b(i, j));
        antipode_.emplace(alg_, std::move(s), Multiplicativity::antimorphism);
        star_.emplace(compose(*gamma_, *antipode_));
    }
}

std::size_t TriangularAlgebra::index(int i, int j) const {
    if (!valid(i, j)) throw std::out_of_range("no generator a[" + std::to_string(i) + "," + std::to_string(j) + "]");
    // Rows 1..i-1 contribute n, n-1, ..., n-i+2 generators.
    const int before = (i - 1) * n_ - (i - 1) * (i - 2) / 2;
    return static_cast<std::size_t>(before + (j - i));
}

Element TriangularAlgebra::a(int i, int j, std::int64_t power) const {
    return Element::generator(alg_, index(i, j), power);
}

Element TriangularAlgebra::det() const {
    Element d = one();
    for (int i = 1; i <= n_; ++i) d *= a(i, i);
    return d;
}

Element TriangularAlgebra::t() const {
    if (!localized_) throw std::logic_error("t needs the localized algebra");
    return det().unit_inverse();
}

Element TriangularAlgebra::z() const {
    if (!localized_) throw std::logic_error("z needs the localized algebra");
    return a(1, 1) * a(2, 2, -1);
}

Element TriangularAlgebra::b(int i, int j) const {
    if (!valid(i, j)) throw std::out_of_range("b index out of range");
    if (i == j) {
        Element r = one();
        for (int k = 1; k <= n_; ++k) {
            if (k != i) r *= a(k, k);
        }
        return r;
    }
    Element r(alg_);
    const int interior = j - i - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
        std::vector<int> chain{i};
        for (int bit = 0; bit < interior; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) chain.push_back(i + 1 + bit);
        }
        chain.push_back(j);
        const int s = static_cast<int>(chain.size()) - 1;
        Element term = one();
        for (int step = 0; step < s; ++step) term *= a(chain[step], chain[step + 1]);
        for (int k = 1; k <= n_; ++k) {
            bool in_chain = false;
            for (int c : chain) in_chain = in_chain || c == k;
            if (!in_chain) term *= a(k, k);
        }
        ScalarQ coeff = ScalarQ::q_power(2 * (j - i) - s);
        if (s % 2 == 1) coeff = -coeff;
        r += coeff * term;
    }
    return r;
}

Element TriangularAlgebra::b_recurrence(int i, int j, Side side) const {
    if (!localized_) throw std::logic_error("the b recurrences need the localized algebra");
    if (!valid(i, j)) throw std::out_of_range("b index out of range");
    if (i == j) throw std::invalid_argument("the b recurrences need i < j");
    Element r(alg_);
    if (side == Side::left) {
        for (int k = i + 1; k <= j; ++k)
            r -= ScalarQ::q_power(2 * (k - i) - 1) * (a(i, k) * a(i, i, -1) * b(k, j));
    } else {
        for (int l = i; l <= j - 1; ++l)
            r -= ScalarQ::q_power(2 * (j - l) - 1) * (a(l, j) * a(j, j, -1) * b(i, l));
    }
    return r;
}

std::vector<Element> TriangularAlgebra::theta_images() const {
    std::vector<Element> out;
    for (const auto& [i, j] : order_) {
        Element img = a(n_ + 1 - j, n_ + 1 - i);
        if (2 * i <= n_ && n_ < 2 * j) img = -img;
        out.push_back(std::move(img));
    }
    return out;
}

const MorphismSpec<Element>& TriangularAlgebra::theta_spec() const {
    if (!theta_) throw std::logic_error("theta is defined for even n only");
    return *theta_;
}

const MorphismSpec<Element>& TriangularAlgebra::antipode_spec() const {
    if (!antipode_) throw std::logic_error("the antipode needs the localized algebra");
    return *antipode_;
}

const MorphismSpec<Element>& TriangularAlgebra::star_spec() const {
    if (!star_) throw std::logic_error("the star structure needs the localized algebra");
    return *star_;
}

}  // namespace qtri
