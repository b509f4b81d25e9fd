#pragma once

// Reference computations that avoid the library's closed formulas.

#include "qtri/coeff.hpp"
#include "qtri/qalgebra.hpp"
#include "qtri/triangular.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using qtri::Element;
using qtri::ScalarQ;

/// Normal-orders a word of generators by adjacent swaps, each swap of
/// g_a g_b (a > b) contributing q^{M[a][b]}. Returns (q-power, sorted word).
inline std::pair<std::int64_t, std::vector<std::size_t>> bubble_sort(const qtri::QAlgebra& alg,
                                                                     std::vector<std::size_t> word) {
    std::int64_t qpow = 0;
    for (bool swapped = true; swapped;) {
        swapped = false;
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] > word[p + 1]) {
                qpow += alg.comm(word[p], word[p + 1]);
                std::swap(word[p], word[p + 1]);
                swapped = true;
            }
        }
    }
    return {qpow, word};
}

/// The word as an element, built term by term from the sorted word.
inline Element word_element(const qtri::AlgebraPtr& alg, const std::vector<std::size_t>& word,
                            const ScalarQ& c = ScalarQ(1)) {
    auto [qpow, sorted] = bubble_sort(*alg, word);
    qtri::Monomial m(alg->size());
    for (auto g : sorted) ++m[g];
    return Element::monomial(alg, m, c * ScalarQ::q_power(qpow));
}

/// b_ij by explicit chain enumeration: every subset of the interior points
/// (i, j) gives a chain; chain generators come first, then the diagonals off
/// the chain in increasing order.
inline Element chain_b(const qtri::TriangularAlgebra& tri, int i, int j) {
    const int n = tri.n();
    Element out(tri.algebra());
    if (i == j) {
        std::vector<std::size_t> word;
        for (int k = 1; k <= n; ++k)
            if (k != i) word.push_back(tri.index(k, k));
        return word_element(tri.algebra(), word);
    }
    const int interior = j - i - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
        std::vector<int> chain{i};
        for (int p = 0; p < interior; ++p)
            if (mask & (std::uint64_t{1} << p)) chain.push_back(i + 1 + p);
        chain.push_back(j);
        const int s = static_cast<int>(chain.size()) - 1;
        std::vector<std::size_t> word;
        for (int p = 0; p < s; ++p) word.push_back(tri.index(chain[p], chain[p + 1]));
        for (int k = 1; k <= n; ++k) {
            bool on = false;
            for (int c : chain) on = on || c == k;
            if (!on) word.push_back(tri.index(k, k));
        }
        const ScalarQ c = ScalarQ(s % 2 ? -1 : 1) * ScalarQ::q_power(2 * (j - i) - s);
        out += word_element(tri.algebra(), word, c);
    }
    return out;
}

/// Coefficients evaluated at q = q0, keyed by monomial.
inline std::map<qtri::Monomial, qtri::GaussianRational> evaluate_at(const Element& e,
                                                                    const qtri::GaussianRational& q0) {
    std::map<qtri::Monomial, qtri::GaussianRational> out;
    for (const auto& [m, c] : e.terms()) {
        auto v = c.eval(q0);
        if (!v.is_zero()) out.emplace(m, v);
    }
    return out;
}

/// q-exponent m with x * y = q^m y * x for monomials x, y, found by sorting
/// the concatenated words both ways. Exponents must be nonnegative.
inline std::int64_t commutation_exponent(const qtri::QAlgebra& alg, const qtri::Monomial& x,
                                         const qtri::Monomial& y) {
    auto word = [](const qtri::Monomial& m) {
        std::vector<std::size_t> w;
        for (std::size_t g = 0; g < m.size(); ++g)
            for (std::int64_t e = 0; e < m[g]; ++e) w.push_back(g);
        return w;
    };
    auto xy = word(x);
    auto yw = word(y);
    xy.insert(xy.end(), yw.begin(), yw.end());
    auto yx = word(y);
    auto xw = word(x);
    yx.insert(yx.end(), xw.begin(), xw.end());
    return bubble_sort(alg, xy).first - bubble_sort(alg, yx).first;
}

}  // namespace oracle
