#include "tfr/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace tfr {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(const Int& p) {
    if (!is_prime(p)) throw Error("NotPrime", "characteristic must be prime, got " + p.str());
    FieldSpec f;
    f.kind = Kind::prime;
    f.p = p;
    return f;
}

std::string FieldSpec::str() const {
    return kind == Kind::rationals ? "Q" : "F_" + p.str();
}

Int mod_inverse(const Int& a, const Int& p) {
    Int old_r = a % p, r = p;
    if (old_r < 0) old_r += p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    assert(old_r == 1);
    old_s %= p;
    if (old_s < 0) old_s += p;
    return old_s;
}

QMat to_rational(const IMat& m) {
    QMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = to_rational(m[i]);
    return r;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<size_t> echelonize(QMat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    const size_t nc = ncols(m);
    for (size_t col = 0; col < nc && row < m.size(); ++col) {
        size_t pr = row;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) continue;
        std::swap(m[row], m[pr]);
        const Rat piv = m[row][col];
        for (size_t j = col; j < nc; ++j) m[row][j] /= piv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (size_t j = col; j < nc; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(const QMat& m) {
    QMat copy = m;
    return echelonize(copy).size();
}

size_t rank(const IMat& m) { return rank(to_rational(m)); }

size_t rank(const IMat& m, const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::rationals) return rank(m);
    const Int& p = field.p;
    IMat a(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        a[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) {
            a[i][j] = m[i][j] % p;
            if (a[i][j] < 0) a[i][j] += p;
        }
    }
    size_t rk = 0;
    const size_t nc = ncols(a);
    for (size_t col = 0; col < nc && rk < a.size(); ++col) {
        size_t pr = rk;
        while (pr < a.size() && a[pr][col] == 0) ++pr;
        if (pr == a.size()) continue;
        std::swap(a[rk], a[pr]);
        const Int inv = mod_inverse(a[rk][col], p);
        for (size_t j = col; j < nc; ++j) a[rk][j] = a[rk][j] * inv % p;
        for (size_t i = rk + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const Int f = a[i][col];
            for (size_t j = col; j < nc; ++j) {
                a[i][j] = (a[i][j] - f * a[rk][j]) % p;
                if (a[i][j] < 0) a[i][j] += p;
            }
        }
        ++rk;
    }
    return rk;
}

QMat kernel(const QMat& m) {
    const size_t nc = ncols(m);
    QMat copy = m;
    const std::vector<size_t> pivots = echelonize(copy);
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t free_col = 0; free_col < nc; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(nc, Rat(0));
        v[free_col] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -copy[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

IMat kernel_primitive(const IMat& m) {
    QMat kq = kernel(to_rational(m));
    IMat out;
    out.reserve(kq.size());
    for (const auto& v : kq) out.push_back(primitive(v));
    return out;
}

std::optional<QVec> solve(const QMat& m, const QVec& rhs) {
    const size_t nc = ncols(m);
    QMat aug(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        aug[i] = m[i];
        aug[i].push_back(rhs[i]);
    }
    std::vector<size_t> pivots = echelonize(aug);
    if (!pivots.empty() && pivots.back() == nc) return std::nullopt;  // 0 = 1 row
    QVec x(nc, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][nc];
    return x;
}

Rat det(const QMat& m) {
    QMat a = m;
    const size_t n = a.size();
    Rat d = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pr = col;
        while (pr < n && a[pr][col] == 0) ++pr;
        if (pr == n) return 0;
        if (pr != col) {
            std::swap(a[col], a[pr]);
            d = -d;
        }
        d *= a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            const Rat f = a[i][col] / a[col][col];
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return d;
}

namespace {

IMat identity(size_t n) {
    IMat e(n, IVec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) e[i][i] = 1;
    return e;
}

}  // namespace

SmithForm smith_normal_form(const IMat& a) {
    const size_t nr = a.size();
    const size_t nc = ncols(a);
    SmithForm s;
    s.d = a;
    s.u = identity(nr);
    s.u_inv = identity(nr);
    s.v = identity(nc);
    IMat& d = s.d;

    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.u[i], s.u[j]);
        for (size_t k = 0; k < nr; ++k) std::swap(s.u_inv[k][i], s.u_inv[k][j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (size_t k = 0; k < nr; ++k) std::swap(d[k][i], d[k][j]);
        for (size_t k = 0; k < nc; ++k) std::swap(s.v[k][i], s.v[k][j]);
    };
    // row[i] -= f * row[j]
    auto add_row = [&](size_t i, size_t j, const Int& f) {
        for (size_t k = 0; k < nc; ++k) d[i][k] -= f * d[j][k];
        for (size_t k = 0; k < nr; ++k) s.u[i][k] -= f * s.u[j][k];
        for (size_t k = 0; k < nr; ++k) s.u_inv[k][j] += f * s.u_inv[k][i];
    };
    auto add_col = [&](size_t i, size_t j, const Int& f) {
        for (size_t k = 0; k < nr; ++k) d[k][i] -= f * d[k][j];
        for (size_t k = 0; k < nc; ++k) s.v[k][i] -= f * s.v[k][j];
    };
    auto negate_row = [&](size_t i) {
        for (size_t k = 0; k < nc; ++k) d[i][k] = -d[i][k];
        for (size_t k = 0; k < nr; ++k) s.u[i][k] = -s.u[i][k];
        for (size_t k = 0; k < nr; ++k) s.u_inv[k][i] = -s.u_inv[k][i];
    };

    size_t t = 0;
    while (t < nr && t < nc) {
        // locate a nonzero entry with minimal absolute value in d[t.., t..]
        size_t pi = nr, pj = nc;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j)
                if (d[i][j] != 0 &&
                    (pi == nr || abs(d[i][j]) < abs(d[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (size_t i = t + 1; i < nr; ++i) {
            if (d[i][t] == 0) continue;
            Int q = d[i][t] / d[t][t];
            add_row(i, t, q);
            if (d[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < nc; ++j) {
            if (d[t][j] == 0) continue;
            Int q = d[t][j] / d[t][t];
            add_col(j, t, q);
            if (d[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; redo this pivot
        if (d[t][t] < 0) negate_row(t);
        ++t;
    }
    s.rank = t;
    return s;
}

IMat saturated_lattice_basis(const IMat& gens) {
    if (gens.empty()) return {};
    const size_t dim = ncols(gens);
    // columns of the matrix are the generators
    IMat a(dim, IVec(gens.size(), Int(0)));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < dim; ++j) a[j][i] = gens[i][j];
    SmithForm s = smith_normal_form(a);
    // first r columns of u_inv span the saturation
    IMat basis(s.rank, IVec(dim, Int(0)));
    for (size_t k = 0; k < s.rank; ++k)
        for (size_t j = 0; j < dim; ++j) basis[k][j] = s.u_inv[j][k];
    return basis;
}

IMat lattice_projection(const IMat& gens, size_t ambient_dim) {
    IMat a(ambient_dim, IVec(std::max<size_t>(gens.size(), 1), Int(0)));
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < ambient_dim; ++j) a[j][i] = gens[i][j];
    SmithForm s = smith_normal_form(a);
    IMat proj;
    for (size_t k = s.rank; k < ambient_dim; ++k) proj.push_back(s.u[k]);
    return proj;
}

}  // namespace tfr
