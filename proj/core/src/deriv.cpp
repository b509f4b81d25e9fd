#include "qtri/deriv.hpp"

#include "qtri/expr.hpp"
#include "qtri/linear.hpp"
#include "qtri/triangular.hpp"

#include <map>
#include <stdexcept>

namespace qtri {

DerivationSpec::DerivationSpec(AlgebraPtr alg, std::vector<Element> imgs)
    : algebra(std::move(alg)), images(std::move(imgs)) {
    if (!algebra) throw std::invalid_argument("derivation needs an algebra");
    if (images.size() != algebra->size()) throw std::invalid_argument("one image per generator required");
    for (const auto& img : images) require_same_algebra(algebra, img.algebra());
}

DerivationSpec DerivationSpec::zero(const AlgebraPtr& alg) {
    return {alg, std::vector<Element>(alg->size(), Element(alg))};
}

namespace {

// D(g^e) for a single generator power.
Element derive_power(const DerivationSpec& d, std::size_t g, std::int64_t e) {
    const AlgebraPtr& alg = d.algebra;
    Element base = Element::generator(alg, g);
    Element dbase = d.image(g);
    if (e < 0) {
        const Element inv = base.unit_inverse();
        dbase = -(inv * dbase * inv);
        base = inv;
        e = -e;
    }
    Element sum(alg);
    Element left = Element::one(alg);
    for (std::int64_t k = 0; k < e; ++k) {
        sum += left * dbase * base.pow(e - 1 - k);
        left *= base;
    }
    return sum;
}

}  // namespace

Element apply_derivation(const DerivationSpec& d, const Element& e) {
    require_same_algebra(d.algebra, e.algebra());
    const AlgebraPtr& alg = d.algebra;
    Element out(alg);
    for (const auto& [m, c] : e.terms()) {
        std::vector<std::size_t> support;
        for (std::size_t g = 0; g < m.size(); ++g) {
            if (m[g] != 0) support.push_back(g);
        }
        for (std::size_t pos = 0; pos < support.size(); ++pos) {
            Monomial before(alg->size()), after(alg->size());
            for (std::size_t k = 0; k < support.size(); ++k) {
                if (k < pos) before[support[k]] = m[support[k]];
                if (k > pos) after[support[k]] = m[support[k]];
            }
            const Element piece = Element::monomial(alg, before) * derive_power(d, support[pos], m[support[pos]]) *
                                  Element::monomial(alg, after);
            out += c * piece;
        }
    }
    return out;
}

bool is_derivation(const DerivationSpec& d) {
    const QAlgebra& alg = *d.algebra;
    for (std::size_t a = 0; a < alg.size(); ++a) {
        for (std::size_t b = a + 1; b < alg.size(); ++b) {
            const Element ga = Element::generator(d.algebra, a);
            const Element gb = Element::generator(d.algebra, b);
            const Element lhs = d.image(a) * gb + ga * d.image(b);
            const Element rhs = ScalarQ::q_power(alg.comm(a, b)) * (d.image(b) * ga + gb * d.image(a));
            if (!(lhs == rhs)) return false;
        }
    }
    return true;
}

DerivationSpec inner_derivation(const Element& x) {
    const AlgebraPtr& alg = x.algebra();
    std::vector<Element> images;
    for (std::size_t g = 0; g < alg->size(); ++g) {
        const Element gen = Element::generator(alg, g);
        images.push_back(x * gen - gen * x);
    }
    return {alg, std::move(images)};
}

DerivationSpec operator+(const DerivationSpec& a, const DerivationSpec& b) {
    require_same_algebra(a.algebra, b.algebra);
    std::vector<Element> images;
    for (std::size_t g = 0; g < a.images.size(); ++g) images.push_back(a.images[g] + b.images[g]);
    return {a.algebra, std::move(images)};
}

DerivationSpec operator-(const DerivationSpec& a, const DerivationSpec& b) { return a + ScalarQ(-1) * b; }

DerivationSpec operator*(const ScalarQ& c, const DerivationSpec& d) {
    std::vector<Element> images;
    for (const auto& img : d.images) images.push_back(c * img);
    return {d.algebra, std::move(images)};
}

DerivationSpec left_multiple(const Element& c, const DerivationSpec& d) {
    std::vector<Element> images;
    for (const auto& img : d.images) images.push_back(c * img);
    return {d.algebra, std::move(images)};
}

DerivationSpec commutator(const DerivationSpec& d, const DerivationSpec& e) {
    require_same_algebra(d.algebra, e.algebra);
    std::vector<Element> images;
    for (std::size_t g = 0; g < d.images.size(); ++g)
        images.push_back(apply_derivation(d, e.images[g]) - apply_derivation(e, d.images[g]));
    return {d.algebra, std::move(images)};
}

bool same_on_generators(const DerivationSpec& a, const DerivationSpec& b) {
    return same_algebra(a.algebra, b.algebra) && a.images == b.images;
}

namespace {

std::size_t t2_index(int s, int t) {
    if (s == 1 && t == 1) return 0;
    if (s == 1 && t == 2) return 1;
    if (s == 2 && t == 2) return 2;
    throw std::out_of_range("no generator a[" + std::to_string(s) + "," + std::to_string(t) + "] in T_q(2)");
}

}  // namespace

DerivationSpec monomial_derivation(int s, int t, const NuTriple& nu, bool localized) {
    const AlgebraPtr alg = triangular_presentation(2, localized);
    DerivationSpec d = DerivationSpec::zero(alg);
    d.images[t2_index(s, t)] = Element::monomial(alg, Monomial(std::vector<std::int64_t>(nu.begin(), nu.end())));
    return d;
}

bool classification_predicate(int s, int t, const NuTriple& nu) {
    if (s == 1 && t == 2) return nu[1] == 1;
    t2_index(s, t);
    const NuTriple a{0, 0, 1};
    const NuTriple b{1, 0, 0};
    return nu == a || nu == b;
}

std::vector<ClassificationRow> classify_T2(int bound) {
    if (bound < 1) throw std::invalid_argument("classification bound must be at least 1");
    std::vector<ClassificationRow> rows;
    const std::array<std::pair<int, int>, 3> gens{{{1, 1}, {1, 2}, {2, 2}}};
    for (const auto& [s, t] : gens) {
        for (std::int64_t a = 0; a <= bound; ++a) {
            for (std::int64_t b = 0; b <= bound; ++b) {
                for (std::int64_t c = 0; c <= bound; ++c) {
                    const NuTriple nu{a, b, c};
                    rows.push_back({s, t, nu, is_derivation(monomial_derivation(s, t, nu)),
                                    classification_predicate(s, t, nu)});
                }
            }
        }
    }
    return rows;
}

std::vector<std::pair<std::string, DerivationSpec>> h1_representatives() {
    return {
        {"D11", monomial_derivation(1, 1, {1, 0, 0})},
        {"D12", monomial_derivation(1, 2, {0, 1, 0})},
        {"D22", monomial_derivation(2, 2, {0, 0, 1})},
        {"D11,(0,0,1)", monomial_derivation(1, 1, {0, 0, 1})},
        {"D22,(1,0,0)", monomial_derivation(2, 2, {1, 0, 0})},
    };
}

CheckReport h1_membership_T2(int degree_bound) {
    CheckReport report;
    report.name = "h1-membership";
    report.n = 2;
    auto fail = [&report](std::string label, std::string lhs, std::string rhs) {
        if (!report.passed) return;
        report.passed = false;
        report.witness = Witness{std::move(label), std::move(lhs), std::move(rhs)};
    };

    const auto reps = h1_representatives();
    for (const auto& [name, d] : reps) {
        ++report.checks;
        if (!is_derivation(d)) fail(name + " is a derivation", "false", "true");
    }

    const AlgebraPtr alg = reps.front().second.algebra;
    std::vector<DerivationSpec> inner;
    for (std::int64_t a = 0; a <= degree_bound; ++a) {
        for (std::int64_t b = 0; a + b <= degree_bound; ++b) {
            for (std::int64_t c = 0; a + b + c <= degree_bound; ++c) {
                if (a + b + c == 0) continue;
                inner.push_back(inner_derivation(Element::monomial(alg, Monomial(std::vector<std::int64_t>{a, b, c}))));
            }
        }
    }

    // Coordinates (generator, monomial) of the generator images.
    using Coord = std::pair<std::size_t, Monomial>;
    std::map<Coord, std::size_t> coords;
    auto collect = [&coords](const DerivationSpec& d) {
        for (std::size_t g = 0; g < d.images.size(); ++g) {
            for (const auto& [m, c] : d.images[g].terms()) coords.try_emplace({g, m}, coords.size());
        }
    };
    for (const auto& [name, d] : reps) collect(d);
    for (const auto& d : inner) collect(d);

    auto column = [&coords](const DerivationSpec& d) {
        std::vector<ScalarQ> col(coords.size());
        for (std::size_t g = 0; g < d.images.size(); ++g) {
            for (const auto& [m, c] : d.images[g].terms()) col[coords.at({g, m})] = c;
        }
        return col;
    };
    auto matrix = [&coords](const std::vector<std::vector<ScalarQ>>& cols) {
        ScalarMatrix m(coords.size(), std::vector<ScalarQ>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t r = 0; r < coords.size(); ++r) m[r][c] = cols[c][r];
        }
        return m;
    };

    std::vector<std::vector<ScalarQ>> inner_cols, all_cols;
    for (const auto& [name, d] : reps) all_cols.push_back(column(d));
    for (const auto& d : inner) {
        inner_cols.push_back(column(d));
        all_cols.push_back(inner_cols.back());
    }
    const std::size_t inner_rank = rank(matrix(inner_cols));
    const std::size_t full_rank = rank(matrix(all_cols));
    ++report.checks;
    if (full_rank != inner_rank + reps.size())
        fail("rank of the five representatives modulo inner derivations of degree <= " +
                 std::to_string(degree_bound),
             std::to_string(full_rank - inner_rank), std::to_string(reps.size()));
    report.notes.push_back("inner derivations ad_x checked for monomials x of degree <= " +
                           std::to_string(degree_bound) + " (" + std::to_string(inner.size()) +
                           " monomials, rank " + std::to_string(inner_rank) + ")");
    report.notes.push_back("bounded-degree check; independence modulo all inner derivations is not verified");
    return report;
}

CheckReport utq2_derivation_table() {
    const TriangularAlgebra ut(2, true);
    const AlgebraPtr& alg = ut.algebra();
    CheckReport report;
    report.name = "utq2-derivation-table";
    report.n = 2;
    auto check = [&report](const std::string& label, const Element& lhs, const Element& rhs) {
        ++report.checks;
        if (lhs == rhs || !report.passed) return;
        report.passed = false;
        report.witness = Witness{label, format(lhs), format(rhs)};
    };
    auto check_flag = [&report](const std::string& label, bool ok) {
        ++report.checks;
        if (ok || !report.passed) return;
        report.passed = false;
        report.witness = Witness{label, "false", "true"};
    };

    const Element a11 = ut.a(1, 1), a12 = ut.a(1, 2), a22 = ut.a(2, 2);
    const Element zero(alg);
    const Element z = ut.z();
    const Element zinv = z.unit_inverse();

    const DerivationSpec d11bar(alg, {a11, zero, a22});
    const DerivationSpec d12bar(alg, {zero, a12, zero});
    const DerivationSpec dz(alg, {zero, zero, -(zinv * zinv * a11)});
    const DerivationSpec D11 = monomial_derivation(1, 1, {1, 0, 0}, true);
    const DerivationSpec D12 = monomial_derivation(1, 2, {0, 1, 0}, true);
    const DerivationSpec D22 = monomial_derivation(2, 2, {0, 0, 1}, true);

    const std::vector<std::pair<std::string, const DerivationSpec*>> named{
        {"d11bar", &d11bar}, {"d12bar", &d12bar}, {"dz", &dz}, {"D11", &D11}, {"D12", &D12}, {"D22", &D22}};
    for (const auto& [name, d] : named) check_flag(name + " is a derivation", is_derivation(*d));

    // Table rows, written out entry by entry.
    const std::vector<std::pair<std::string, std::array<Element, 3>>> table{
        {"d11bar", {a11, zero, a22}},
        {"d12bar", {zero, a12, zero}},
        {"dz", {zero, zero, -(zinv.pow(2) * a11)}},
    };
    const std::array<std::string, 3> gen_names{"a11", "a12", "a22"};
    const std::array<const DerivationSpec*, 3> table_specs{&d11bar, &d12bar, &dz};
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t g = 0; g < 3; ++g) {
            check(table[r].first + "(" + gen_names[g] + ")",
                  apply_derivation(*table_specs[r], Element::generator(alg, g)), table[r].second[g]);
        }
    }
    check("d11bar(z) = 0", apply_derivation(d11bar, z), zero);
    check("d12bar(z) = 0", apply_derivation(d12bar, z), zero);
    check("dz(z) = 1", apply_derivation(dz, z), ut.one());

    auto same = [&](const std::string& label, const DerivationSpec& lhs, const DerivationSpec& rhs) {
        for (std::size_t g = 0; g < 3; ++g) check(label + " on " + gen_names[g], lhs.image(g), rhs.image(g));
    };
    same("d11bar = D11 + D22", d11bar, D11 + D22);
    same("d12bar = D12", d12bar, D12);
    same("dz = -z^-1 D22", dz, left_multiple(-zinv, D22));
    same("D11 = d11bar + z dz", D11, d11bar + left_multiple(z, dz));
    same("D12 = d12bar", D12, d12bar);
    same("D22 = -z dz", D22, left_multiple(-z, dz));
    return report;
}

}  // namespace qtri
