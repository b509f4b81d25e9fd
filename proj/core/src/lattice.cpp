#include "qtri/lattice.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qtri {

namespace {

using BigRow = std::vector<mpz_class>;

std::int64_t to_int64(const mpz_class& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("lattice entry exceeds 64 bits");
    return v.get_si();
}

IntVector to_small(const BigRow& row) {
    IntVector out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(to_int64(v));
    return out;
}

// Phase one of the simplex method with Bland's rule, exact over Q:
// is {z >= 0 : A z = b} nonempty?
bool lp_feasible(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b) {
    const std::size_t m = a.size();
    const std::size_t k = m ? a[0].size() : 0;
    const std::size_t cols = k + m;
    std::vector<std::vector<mpq_class>> t(m, std::vector<mpq_class>(cols + 1, 0));
    std::vector<mpq_class> d(cols + 1, 0);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        const int sign = sgn(b[i]) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < k; ++j) t[i][j] = sign * a[i][j];
        t[i][k + i] = 1;
        t[i][cols] = sign * b[i];
        basis[i] = k + i;
        for (std::size_t j = 0; j < k; ++j) d[j] -= t[i][j];
        d[cols] -= t[i][cols];
    }
    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (sgn(d[j]) < 0) {
                enter = j;
                break;
            }
        }
        if (enter == cols) break;
        std::size_t leave = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            const mpq_class ratio = t[i][cols] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen for phase one
        const mpq_class piv = t[leave][enter];
        for (auto& v : t[leave]) v /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || sgn(t[i][enter]) == 0) continue;
            const mpq_class f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        const mpq_class f = d[enter];
        for (std::size_t j = 0; j <= cols; ++j) d[j] -= f * t[leave][j];
        basis[leave] = enter;
    }
    return sgn(d[cols]) == 0;
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void axpy(BigRow& target, const mpz_class& factor, const BigRow& source) {
    for (std::size_t c = 0; c < target.size(); ++c) target[c] -= factor * source[c];
}

std::vector<BigRow> hnf_big(std::vector<BigRow> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (sgn(rows[i][c]) == 0) continue;
                axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
                if (sgn(rows[i][c]) != 0) done = false;
            }
            if (done) break;
        }
        if (sgn(rows[r][c]) == 0) continue;
        if (sgn(rows[r][c]) < 0) {
            for (auto& v : rows[r]) v = -v;
        }
        for (std::size_t i = 0; i < r; ++i) axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace

std::vector<IntVector> hermite_normal_form(std::vector<IntVector> rows) {
    std::vector<BigRow> big;
    for (const auto& row : rows) {
        BigRow b;
        for (auto v : row) b.emplace_back(static_cast<long>(v));
        big.push_back(std::move(b));
    }
    std::vector<IntVector> out;
    for (const auto& row : hnf_big(std::move(big))) out.push_back(to_small(row));
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t cols) {
    // Column operations on A tracked in U; the columns of U whose image
    // column in A vanishes span the kernel.
    std::vector<BigRow> m;
    for (const auto& row : a) {
        if (row.size() != cols) throw std::invalid_argument("matrix row has the wrong length");
        BigRow b;
        for (auto v : row) b.emplace_back(v);
        m.push_back(std::move(b));
    }
    std::vector<BigRow> u(cols, BigRow(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) u[c][c] = 1;  // u[c] is column c of U

    auto combine = [&](std::size_t p, std::size_t c, const mpz_class& x, const mpz_class& y,
                       const mpz_class& s, const mpz_class& t) {
        // (col_p, col_c) <- (x col_p + y col_c, s col_p + t col_c)
        for (auto& row : m) {
            mpz_class np = x * row[p] + y * row[c];
            mpz_class nc = s * row[p] + t * row[c];
            row[p] = std::move(np);
            row[c] = std::move(nc);
        }
        for (std::size_t k = 0; k < cols; ++k) {
            mpz_class np = x * u[p][k] + y * u[c][k];
            mpz_class nc = s * u[p][k] + t * u[c][k];
            u[p][k] = std::move(np);
            u[c][k] = std::move(nc);
        }
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < m.size() && pivot < cols; ++r) {
        for (std::size_t c = pivot + 1; c < cols; ++c) {
            if (sgn(m[r][c]) == 0) continue;
            const mpz_class av = m[r][pivot];
            const mpz_class bv = m[r][c];
            mpz_class g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
            combine(pivot, c, x, y, mpz_class(-bv / g), mpz_class(av / g));
        }
        if (sgn(m[r][pivot]) != 0) ++pivot;
    }

    std::vector<BigRow> kernel;
    for (std::size_t c = pivot; c < cols; ++c) kernel.push_back(u[c]);
    std::vector<IntVector> out;
    for (const auto& row : hnf_big(std::move(kernel))) out.push_back(to_small(row));
    return out;
}

std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& a, std::size_t cols,
                                     std::size_t max_candidates) {
    const std::size_t rows = a.size();
    auto image = [&](const IntVector& x) {
        IntVector ax(rows, 0);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (x[c] != 0) ax[i] = detail::checked_add(ax[i], detail::checked_mul(a[i][c], x[c]));
            }
        }
        return ax;
    };
    auto dominates = [](const IntVector& big, const IntVector& small) {
        for (std::size_t c = 0; c < big.size(); ++c) {
            if (big[c] < small[c]) return false;
        }
        return true;
    };
    std::vector<IntVector> columns;
    for (std::size_t c = 0; c < cols; ++c) {
        IntVector e(cols, 0);
        e[c] = 1;
        columns.push_back(image(e));
    }

    std::vector<IntVector> basis;
    std::set<IntVector> frontier;
    for (std::size_t c = 0; c < cols; ++c) {
        IntVector e(cols, 0);
        e[c] = 1;
        frontier.insert(e);
    }
    std::size_t seen = 0;
    while (!frontier.empty()) {
        std::vector<std::pair<IntVector, IntVector>> open;
        for (const auto& x : frontier) {
            IntVector ax = image(x);
            if (std::all_of(ax.begin(), ax.end(), [](std::int64_t v) { return v == 0; })) {
                basis.push_back(x);
            } else {
                open.emplace_back(x, std::move(ax));
            }
        }
        std::set<IntVector> next;
        for (const auto& [x, ax] : open) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::int64_t dot = 0;
                for (std::size_t i = 0; i < rows; ++i)
                    dot = detail::checked_add(dot, detail::checked_mul(ax[i], columns[c][i]));
                if (dot >= 0) continue;
                IntVector y = x;
                ++y[c];
                bool reducible = false;
                for (const auto& b : basis) {
                    if (dominates(y, b)) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible) next.insert(std::move(y));
            }
        }
        seen += next.size();
        if (seen > max_candidates) throw std::runtime_error("Hilbert basis search exceeded its budget");
        frontier = std::move(next);
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

CenterLattice center_lattice(const QAlgebra& alg) {
    CenterLattice out;
    const std::size_t n = alg.size();
    out.lattice_basis = integer_kernel(alg.comm_matrix(), n);
    const std::size_t r = out.lattice_basis.size();
    if (r == 0) return out;

    std::vector<std::size_t> constrained;
    for (std::size_t g = 0; g < n; ++g) {
        if (!alg.invertible(g)) constrained.push_back(g);
    }
    for (std::size_t t = 0; t < r; ++t) {
        for (auto p : constrained) {
            if (out.lattice_basis[t][p] < 0) {
                out.cone_violations.push_back(t);
                break;
            }
        }
    }

    auto lift = [&](const IntVector& y) {
        IntVector x(n, 0);
        for (std::size_t t = 0; t < r; ++t) {
            if (y[t] == 0) continue;
            for (std::size_t g = 0; g < n; ++g)
                x[g] = detail::checked_add(x[g], detail::checked_mul(y[t], out.lattice_basis[t][g]));
        }
        return x;
    };

    // Lattice coordinates y with x = sum_t y_t L_t; the constrained block of x is B y.
    IntMatrix b(constrained.size(), std::vector<int>(r, 0));
    for (std::size_t p = 0; p < constrained.size(); ++p) {
        for (std::size_t t = 0; t < r; ++t) {
            const auto v = out.lattice_basis[t][constrained[p]];
            if (v > INT32_MAX || v < INT32_MIN) throw std::overflow_error("lattice entry too large");
            b[p][t] = static_cast<int>(v);
        }
    }

    std::vector<IntVector> units;
    for (const auto& y : integer_kernel(b, r)) units.push_back(lift(y));
    out.unit_generators = hermite_normal_form(std::move(units));
    if (constrained.empty()) return out;

    // B (y+ - y-) - s = 0 with y+, y-, s >= 0.
    const std::size_t cols = 2 * r + constrained.size();
    {
        // Some lattice vector with B y >= 0 and B y != 0, scaled to sum(B y) = 1?
        std::vector<std::vector<mpq_class>> a(constrained.size() + 1, std::vector<mpq_class>(cols, 0));
        std::vector<mpq_class> rhs(constrained.size() + 1, 0);
        for (std::size_t p = 0; p < constrained.size(); ++p) {
            for (std::size_t t = 0; t < r; ++t) {
                a[p][t] = b[p][t];
                a[p][r + t] = -b[p][t];
            }
            a[p][2 * r + p] = -1;
            a[constrained.size()][2 * r + p] = 1;
        }
        rhs[constrained.size()] = 1;
        if (!lp_feasible(std::move(a), std::move(rhs))) return out;
    }
    std::vector<IntVector> system(constrained.size(), IntVector(cols, 0));
    for (std::size_t p = 0; p < constrained.size(); ++p) {
        for (std::size_t t = 0; t < r; ++t) {
            system[p][t] = b[p][t];
            system[p][r + t] = -b[p][t];
        }
        system[p][2 * r + p] = -1;
    }
    std::set<IntVector> gens;
    for (const auto& sol : hilbert_basis(system, cols)) {
        bool slack_zero = true;
        for (std::size_t p = 0; p < constrained.size(); ++p) slack_zero = slack_zero && sol[2 * r + p] == 0;
        if (slack_zero) continue;
        IntVector y(r);
        for (std::size_t t = 0; t < r; ++t) y[t] = sol[t] - sol[r + t];
        gens.insert(lift(y));
    }
    out.monoid_generators.assign(gens.begin(), gens.end());
    return out;
}

}  // namespace qtri
