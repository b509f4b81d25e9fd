#include "qtri/structure.hpp"

#include "qtri/expr.hpp"
#include "qtri/random.hpp"

#include <stdexcept>

namespace qtri {

namespace {

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

class Recorder {
public:
    Recorder(std::string name, int n) {
        report_.name = std::move(name);
        report_.n = n;
    }

    template <class V>
    bool equal(const std::string& label, const V& lhs, const V& rhs) {
        ++report_.checks;
        if (lhs == rhs) return true;
        fail(label, format(lhs), format(rhs));
        return false;
    }

    void fail(const std::string& label, std::string lhs, std::string rhs) {
        if (!report_.passed) return;
        report_.passed = false;
        report_.witness = Witness{label, std::move(lhs), std::move(rhs)};
    }

    template <class V>
    void relations(const std::string& what, const std::vector<V>& images, const QAlgebra& alg,
                   Multiplicativity mult = Multiplicativity::morphism) {
        ++report_.checks;
        auto f = relation_failure(images, alg, mult);
        if (!f) return;
        if (f->not_unit) {
            fail(what + ": image of " + alg.name(f->a) + " is not a unit", format(images[f->a]), "a unit");
            return;
        }
        const int sign = mult == Multiplicativity::morphism ? 1 : -1;
        fail(what + ": relation " + alg.name(f->a) + " " + alg.name(f->b), format(images[f->a] * images[f->b]),
             format(ScalarQ::q_power(sign * alg.comm(f->a, f->b)) * (images[f->b] * images[f->a])));
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    void absorb(const CheckReport& other) {
        report_.checks += other.checks;
        if (!other.passed && other.witness) fail(other.witness->label, other.witness->lhs, other.witness->rhs);
        for (const auto& n : other.notes) report_.notes.push_back(n);
    }

    CheckReport finish() { return report_; }

private:
    CheckReport report_;
};

// Generators and, in the localized case, the inverses of the diagonal ones.
std::vector<std::pair<std::string, Element>> test_generators(const TriangularAlgebra& alg) {
    std::vector<std::pair<std::string, Element>> out;
    const auto& p = *alg.algebra();
    for (std::size_t g = 0; g < p.size(); ++g) out.emplace_back(p.name(g), Element::generator(alg.algebra(), g));
    if (alg.localized()) {
        for (int i = 1; i <= alg.n(); ++i) out.emplace_back(p.name(alg.index(i, i)) + "^-1", alg.a(i, i, -1));
    }
    return out;
}

template <class V>
std::function<V(const Monomial&)> on_monomials(const MorphismSpec<V>& spec) {
    return [&spec](const Monomial& m) { return spec.apply_monomial(m); };
}

std::function<Element(const Monomial&)> element_map(const MorphismSpec<Element>& spec) {
    return [&spec](const Monomial& m) { return spec.apply_monomial(m); };
}

TriangularAlgebra make(int n, bool localized) { return TriangularAlgebra(n, localized); }

}  // namespace

CheckReport check_bialgebra_maps(const TriangularAlgebra& alg, const MorphismSpec<TensorElement>& delta,
                                 const MorphismSpec<ScalarQ>& eps, std::uint64_t seed,
                                 const std::string& name) {
    Recorder rec(name, alg.n());
    const std::string where = alg.localized() ? "UT: " : "T: ";
    rec.relations(where + "Delta is a point", delta.images(), *alg.algebra());
    rec.relations(where + "eps is a point", eps.images(), *alg.algebra());

    auto d_mono = on_monomials(delta);
    auto e_mono = on_monomials(eps);
    for (const auto& [label, x] : test_generators(alg)) {
        const TensorElement dx = delta.apply(x);
        rec.equal(where + "coassociativity at " + label, replace_factor(dx, 0, d_mono),
                  replace_factor(dx, 1, d_mono));
        rec.equal(where + "(eps x id)Delta at " + label, collapse(contract_factor(dx, 0, e_mono)), x);
        rec.equal(where + "(id x eps)Delta at " + label, collapse(contract_factor(dx, 1, e_mono)), x);
    }

    RandomSource rng(seed);
    for (int s = 0; s < 6; ++s) {
        const Element x = rng.element(alg.algebra(), 3);
        const Element y = rng.element(alg.algebra(), 3);
        rec.equal(where + "Delta(xy) = Delta(x)Delta(y), sample " + std::to_string(s), delta.apply(x * y),
                  delta.apply(x) * delta.apply(y));
        rec.equal(where + "eps(xy) = eps(x)eps(y), sample " + std::to_string(s), eps.apply(x * y),
                  eps.apply(x) * eps.apply(y));
    }
    return rec.finish();
}

CheckReport check_bialgebra(int n, std::uint64_t seed) {
    Recorder rec("bialgebra", n);
    for (bool localized : {false, true}) {
        const TriangularAlgebra alg = make(n, localized);
        rec.absorb(check_bialgebra_maps(alg, alg.coproduct_spec(), alg.counit_spec(), seed));
    }
    return rec.finish();
}

CheckReport check_antipode_with(const TriangularAlgebra& tri, const TriangularAlgebra& utri,
                                const std::map<TriIndex, Element>& b, const MorphismSpec<Element>& s,
                                const std::string& name) {
    const int n = tri.n();
    Recorder rec(name, n);
    rec.relations("S is a point of the opposite algebra", s.images(), *utri.algebra(),
                  Multiplicativity::antimorphism);

    const Element one = utri.one();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            Element left(utri.algebra());
            Element right(utri.algebra());
            for (int k = i; k <= j; ++k) {
                left += s.apply(utri.a(i, k)) * utri.a(k, j);
                right += utri.a(i, k) * s.apply(utri.a(k, j));
            }
            const Element expected = utri.scalar(utri.counit(utri.a(i, j)));
            rec.equal("sum_k S(a_ik) a_kj at " + idx(i, j), left, expected);
            rec.equal("sum_k a_ik S(a_kj) at " + idx(i, j), right, expected);
        }
        const Element inv = utri.a(i, i, -1);
        rec.equal("S(a_ii^-1) a_ii^-1 at i=" + std::to_string(i), s.apply(inv) * inv, one);
        rec.equal("a_ii^-1 S(a_ii^-1) at i=" + std::to_string(i), inv * s.apply(inv), one);
    }
    rec.equal("S(t) = det", s.apply(utri.t()), utri.det());

    const Element det = tri.det();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            Element left(tri.algebra());
            Element right(tri.algebra());
            for (int k = i; k <= j; ++k) {
                left += b.at({i, k}) * tri.a(k, j);
                right += ScalarQ::q_power(2 * (k - j)) * (tri.a(i, k) * b.at({k, j}));
            }
            const Element expected = i == j ? det : Element(tri.algebra());
            rec.equal("sum_k b_ik a_kj at " + idx(i, j), left, expected);
            rec.equal("sum_k q^{2(k-j)} a_ik b_kj at " + idx(i, j), right, expected);
        }
    }
    return rec.finish();
}

CheckReport check_antipode(int n) {
    const TriangularAlgebra tri = make(n, false);
    const TriangularAlgebra utri = make(n, true);
    std::map<TriIndex, Element> b;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) b.emplace(TriIndex{i, j}, tri.b(i, j));
    }
    return check_antipode_with(tri, utri, b, utri.antipode_spec());
}

CheckReport check_S_squared(int n) {
    const TriangularAlgebra alg = make(n, true);
    Recorder rec("s-squared", n);
    for (const auto& [label, x] : test_generators(alg)) {
        rec.equal("S^2 at " + label, alg.antipode(alg.antipode(x)), x);
    }
    return rec.finish();
}

CommutationTables stated_commutation_tables() {
    CommutationTables t;
    t.diagonal = [](int k, int i, int j) {
        if (k < i || k > j) return 0;
        if (k == i || k == j) return 1;
        return 2;
    };
    t.a_b = [](int k, int l, int i, int j) {
        if (l < i || k > j) return 0;
        if (l == i || k == j) return 1;
        return 2;
    };
    t.b_b = [](int k, int l, int i, int j) {
        if ((k == i && l < j) || (i < k && l == j)) return 1;
        if (i < k && l < j) return 2;
        if ((i == k && j < l) || (k < i && l == j)) return -1;
        if (k < i && j < l) return -2;
        return 0;
    };
    return t;
}

CheckReport check_commutation_lemmas(int n, const CommutationTables& tables, const std::string& name) {
    const TriangularAlgebra alg = make(n, false);
    Recorder rec(name, n);
    std::map<TriIndex, Element> b, sb;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            b.emplace(TriIndex{i, j}, alg.b(i, j));
            sb.emplace(TriIndex{i, j}, alg.sigma(b.at({i, j})));
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Element& bij = b.at({i, j});
            const Element& sbij = sb.at({i, j});
            for (int k = 1; k <= n; ++k) {
                const int m = tables.diagonal(k, i, j);
                const std::string at = " at k=" + std::to_string(k) + ", " + idx(i, j) + ", m=" + std::to_string(m);
                rec.equal("a_kk b_ij = q^m b_ij a_kk" + at, alg.a(k, k) * bij,
                          ScalarQ::q_power(m) * (bij * alg.a(k, k)));
                const Element& bkk = b.at({k, k});
                rec.equal("b_kk sigma(b_ij) = q^-m b_ij b_kk" + at, bkk * sbij, ScalarQ::q_power(-m) * (bij * bkk));
            }
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l) {
                    const std::string at = " at " + idx(k, l) + ", " + idx(i, j);
                    const int m1 = tables.a_b(k, l, i, j);
                    rec.equal("a_kl b_ij = q^m b_ij sigma(a_kl)" + at + ", m=" + std::to_string(m1),
                              alg.a(k, l) * bij, ScalarQ::q_power(m1) * (bij * alg.sigma(alg.a(k, l))));
                    const int m2 = tables.b_b(k, l, i, j);
                    rec.equal("b_kl sigma(b_ij) = q^-m b_ij sigma(b_kl)" + at + ", m=" + std::to_string(m2),
                              b.at({k, l}) * sbij, ScalarQ::q_power(-m2) * (bij * sb.at({k, l})));
                }
            }
        }
    }
    return rec.finish();
}

CheckReport check_commutation_lemmas(int n) { return check_commutation_lemmas(n, stated_commutation_tables()); }

CheckReport check_morphism_symmetries(int n, std::uint64_t seed) {
    Recorder rec("symmetries", n);
    RandomSource rng(seed);
    for (bool localized : {false, true}) {
        const TriangularAlgebra alg = make(n, localized);
        const std::string where = localized ? "UT: " : "T: ";
        const auto& sigma = alg.sigma_spec();
        const auto& rho = alg.rho_spec();
        const auto& gamma = alg.gamma_spec();

        auto samples = test_generators(alg);
        for (int s = 0; s < 4; ++s) {
            samples.emplace_back("sample " + std::to_string(s),
                                 ScalarQ(GaussianRational::imaginary_unit() + 1) * rng.element(alg.algebra(), 3));
        }
        for (const auto& [label, x] : samples) {
            const TensorElement dx = alg.coproduct(x);
            rec.equal(where + "(sigma x sigma)Delta = Delta sigma at " + label,
                      map_factors(dx, {element_map(sigma), element_map(sigma)}), alg.coproduct(alg.sigma(x)));
            rec.equal(where + "eps sigma = eps at " + label, alg.counit(alg.sigma(x)), alg.counit(x));
            rec.equal(where + "(rho x rho)Delta = tau Delta rho at " + label,
                      map_factors(dx, {element_map(rho), element_map(rho)}), flip(alg.coproduct(alg.rho(x))));
            rec.equal(where + "eps rho = eps at " + label, alg.counit(alg.rho(x)), alg.counit(x));
            rec.equal(where + "rho^2 = id at " + label, alg.rho(alg.rho(x)), x);
            rec.equal(where + "(gamma x gamma)Delta = tau Delta gamma at " + label,
                      map_factors(dx, {element_map(gamma), element_map(gamma)}, true),
                      flip(alg.coproduct(alg.gamma(x))));
            rec.equal(where + "eps gamma = conj eps at " + label, alg.counit(alg.gamma(x)), alg.counit(x).conj());
            rec.equal(where + "gamma^2 = id at " + label, alg.gamma(alg.gamma(x)), x);
            if (localized) {
                rec.equal(where + "sigma S = S sigma at " + label, alg.sigma(alg.antipode(x)),
                          alg.antipode(alg.sigma(x)));
                rec.equal(where + "rho S = S rho at " + label, alg.rho(alg.antipode(x)), alg.antipode(alg.rho(x)));
                rec.equal(where + "gamma S = S gamma at " + label, alg.gamma(alg.antipode(x)),
                          alg.antipode(alg.gamma(x)));
            }
        }
        if (localized) {
            rec.equal(where + "sigma(t) = t", alg.sigma(alg.t()), alg.t());
            rec.equal(where + "rho(t) = t", alg.rho(alg.t()), alg.t());
            rec.equal(where + "gamma(t) = t", alg.gamma(alg.t()), alg.t());
        }
        if (n % 2 == 0) rec.relations(where + "theta images", alg.theta_images(), *alg.algebra());
    }
    return rec.finish();
}

CheckReport check_star(int n, std::uint64_t seed, int samples) {
    const TriangularAlgebra alg = make(n, true);
    Recorder rec("star", n);
    const auto& star = alg.star_spec();
    auto star_twice_s = [&alg](const Element& e) { return alg.star(alg.antipode(alg.star(alg.antipode(e)))); };

    for (const auto& [label, x] : test_generators(alg)) {
        rec.equal("Delta(x*) = (* x *)Delta(x) at " + label, alg.coproduct(alg.star(x)),
                  map_factors(alg.coproduct(x), {element_map(star), element_map(star)}, true));
        rec.equal("x** = x at " + label, alg.star(alg.star(x)), x);
        rec.equal("(* S)^2 = id at " + label, star_twice_s(x), x);
    }
    const Element a12 = alg.a(1, 2);
    const ScalarQ i = ScalarQ::imaginary_unit();
    rec.equal("(i a12)* = -i a12*", alg.star(i * a12), (-i) * alg.star(a12));

    RandomSource rng(seed);
    for (int s = 0; s < samples; ++s) {
        const std::string at = " at sample " + std::to_string(s);
        const Element x = rng.element(alg.algebra(), 3);
        const Element y = rng.element(alg.algebra(), 2);
        const ScalarQ c = rng.scalar() * (ScalarQ(1) + i);
        const Element xs = alg.star(x);
        rec.equal("x** = x" + at, alg.star(xs), x);
        rec.equal("(c x)* = conj(c) x*" + at, alg.star(c * x), c.conj() * xs);
        rec.equal("(xy)* = y* x*" + at, alg.star(x * y), alg.star(y) * xs);
        rec.equal("eps(x*) = conj eps(x)" + at, alg.counit(xs), alg.counit(x).conj());
        rec.equal("Delta(x*) = (* x *)Delta(x)" + at, alg.coproduct(xs),
                  map_factors(alg.coproduct(x), {element_map(star), element_map(star)}, true));
        rec.equal("(* S)^2 = id" + at, star_twice_s(x), x);
    }
    return rec.finish();
}

CheckReport check_point_product_with(const TriangularAlgebra& alg, const std::vector<TensorElement>& b,
                                     const std::string& name) {
    const int n = alg.n();
    Recorder rec(name, n);
    const Element one = alg.one();
    std::map<TriIndex, TensorElement> amat, bmat;
    std::vector<TensorElement> avec;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            amat.emplace(TriIndex{i, j}, tensor(alg.a(i, j), one));
            bmat.emplace(TriIndex{i, j}, b.at(alg.index(i, j)));
            avec.push_back(amat.at({i, j}));
        }
    }
    std::vector<TensorElement> product;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            TensorElement s(std::vector<AlgebraPtr>{alg.algebra(), alg.algebra()});
            for (int k = i; k <= j; ++k) s += amat.at({i, k}) * bmat.at({k, j});
            product.push_back(std::move(s));
        }
    }
    rec.relations("A is a point", avec, *alg.algebra());
    rec.relations("B is a point", b, *alg.algebra());
    rec.relations("AB is a point", product, *alg.algebra());
    return rec.finish();
}

CheckReport check_point_product(int n) {
    const TriangularAlgebra alg = make(n, false);
    std::vector<TensorElement> b;
    for (std::size_t g = 0; g < alg.generator_count(); ++g)
        b.push_back(tensor(alg.one(), Element::generator(alg.algebra(), g)));
    return check_point_product_with(alg, b);
}

CheckReport check_b_recurrences(int n) {
    const TriangularAlgebra alg = make(n, true);
    Recorder rec("b-recurrence", n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Element bij = alg.b(i, j);
            rec.equal("left recurrence at " + idx(i, j), alg.b_recurrence(i, j, Side::left), bij);
            rec.equal("right recurrence at " + idx(i, j), alg.b_recurrence(i, j, Side::right), bij);
        }
    }
    return rec.finish();
}

CheckReport check_det_relations(int n, std::uint64_t seed) {
    const TriangularAlgebra alg = make(n, false);
    Recorder rec("det", n);
    const Element det = alg.det();
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            rec.equal("det a_ij = q^{2(j-i)} a_ij det at " + idx(i, j), det * alg.a(i, j),
                      ScalarQ::q_power(2 * (j - i)) * (alg.a(i, j) * det));
            rec.equal("rho(b_ij) = b_{n+1-j,n+1-i} at " + idx(i, j), alg.rho(alg.b(i, j)),
                      alg.b(n + 1 - j, n + 1 - i));
            rec.equal("sigma(b_ij) = q^{2(i-j)} b_ij at " + idx(i, j), alg.sigma(alg.b(i, j)),
                      ScalarQ::q_power(2 * (i - j)) * alg.b(i, j));
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            for (unsigned mask = 0; mask < (1U << n); ++mask) {
                Element prod = alg.one();
                int inside = 0;
                int ends = 0;
                for (int x = 1; x <= n; ++x) {
                    if (!(mask & (1U << (x - 1)))) continue;
                    prod *= alg.a(x, x);
                    if (i < x && x < j) ++inside;
                    if (x == i || x == j) ++ends;
                }
                const int m = -2 * inside - ends;
                rec.equal("a_ij prod_X a_xx at " + idx(i, j) + ", X mask " + std::to_string(mask),
                          alg.a(i, j) * prod, ScalarQ::q_power(m) * (prod * alg.a(i, j)));
            }
        }
    }
    RandomSource rng(seed);
    for (int s = 0; s < 6; ++s) {
        const Element b = rng.element(alg.algebra(), 3);
        rec.equal("det b = sigma^-1(b) det, sample " + std::to_string(s), det * b,
                  alg.sigma_inverse_spec().apply(b) * det);
    }
    return rec.finish();
}

CheckReport check_coaction(int n) {
    const TriangularAlgebra alg = make(n, false);
    const AlgebraPtr plane = quantum_affine_space(n);
    Recorder rec("coaction", n);
    std::vector<TensorElement> x1, x2;
    for (int i = 1; i <= n; ++i) {
        TensorElement p(std::vector<AlgebraPtr>{alg.algebra(), plane});
        TensorElement r(std::vector<AlgebraPtr>{alg.algebra(), plane});
        for (int j = i; j <= n; ++j) {
            const Element xj = Element::generator(plane, static_cast<std::size_t>(j - 1));
            p += tensor(alg.a(i, j), xj);
            r += tensor(alg.a(n + 1 - j, n + 1 - i), xj);
        }
        x1.push_back(std::move(p));
        x2.push_back(std::move(r));
    }
    const ScalarQ q = ScalarQ::q();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::string at = " at " + idx(i + 1, j + 1);
            rec.equal("x'_j x'_i = q x'_i x'_j" + at, x1[j] * x1[i], q * (x1[i] * x1[j]));
            rec.equal("x''_j x''_i = q x''_i x''_j" + at, x2[j] * x2[i], q * (x2[i] * x2[j]));
        }
    }
    return rec.finish();
}

std::vector<std::string> suite_names() {
    return {"bialgebra", "antipode", "s-squared",    "commutation", "symmetries",
            "star",      "point-product", "b-recurrence", "det",         "coaction"};
}

CheckReport run_suite(const std::string& name, int n, std::uint64_t seed) {
    if (name == "bialgebra") return check_bialgebra(n, seed);
    if (name == "antipode") return check_antipode(n);
    if (name == "s-squared") return check_S_squared(n);
    if (name == "commutation") return check_commutation_lemmas(n);
    if (name == "symmetries") return check_morphism_symmetries(n, seed);
    if (name == "star") return check_star(n, seed);
    if (name == "point-product") return check_point_product(n);
    if (name == "b-recurrence") return check_b_recurrences(n);
    if (name == "det") return check_det_relations(n, seed);
    if (name == "coaction") return check_coaction(n);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

namespace controls {

CheckReport mutated_coproduct() {
    const TriangularAlgebra alg(2, false);
    std::vector<TensorElement> images = alg.coproduct_spec().images();
    images.at(alg.index(1, 2)) = tensor(alg.a(1, 2), alg.a(1, 2));
    auto delta = MorphismSpec<TensorElement>::unchecked(alg.algebra(), std::move(images));
    return check_bialgebra_maps(alg, delta, alg.counit_spec(), kDefaultSeed, "control: mutated coproduct");
}

CheckReport flipped_b12_sign() {
    const TriangularAlgebra tri(2, false);
    const TriangularAlgebra utri(2, true);
    std::map<TriIndex, Element> b;
    std::vector<Element> s;
    for (int i = 1; i <= 2; ++i) {
        for (int j = i; j <= 2; ++j) {
            const bool flip = i == 1 && j == 2;
            b.emplace(TriIndex{i, j}, flip ? -tri.b(i, j) : tri.b(i, j));
            s.push_back(utri.t() * (flip ? -utri.b(i, j) : utri.b(i, j)));
        }
    }
    auto spec = MorphismSpec<Element>::unchecked(utri.algebra(), std::move(s), Multiplicativity::antimorphism);
    return check_antipode_with(tri, utri, b, spec, "control: flipped b12 sign");
}

CheckReport broken_point_product() {
    const TriangularAlgebra alg(2, false);
    std::vector<TensorElement> b;
    for (std::size_t g = 0; g < alg.generator_count(); ++g)
        b.push_back(tensor(alg.one(), Element::generator(alg.algebra(), g)));
    b.at(alg.index(1, 2)) = tensor(alg.one(), alg.a(1, 1));
    return check_point_product_with(alg, b, "control: broken point product");
}

CheckReport wrong_commutation_table() {
    CommutationTables tables = stated_commutation_tables();
    tables.diagonal = [](int k, int i, int j) { return (k > i && k < j) ? 2 : 0; };
    return check_commutation_lemmas(3, tables, "control: wrong commutation table");
}

std::vector<CheckReport> all() {
    return {mutated_coproduct(), flipped_b12_sign(), broken_point_product(), wrong_commutation_table()};
}

}  // namespace controls

}  // namespace qtri
