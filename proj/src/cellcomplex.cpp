#include "tfr/cellcomplex.hpp"

#include <algorithm>

namespace tfr {

namespace {

// Orientation basis of a cone's span: lex-least ray tuple of full rank.
IMat orientation_basis(const Cone& c) {
    IMat basis;
    for (const auto& r : c.rays()) {
        IMat cand = basis;
        cand.push_back(r);
        if (rank(cand) > basis.size()) basis = std::move(cand);
        if (basis.size() == c.dim()) break;
    }
    return basis;
}

// Coordinates of u in the given basis of its span.
QVec coords_in(const IMat& basis, const IVec& u) {
    const size_t d = u.size();
    QMat sys(d, QVec(basis.size()));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < basis.size(); ++j) sys[i][j] = Rat(basis[j][i]);
    QVec rhs(d);
    for (size_t i = 0; i < d; ++i) rhs[i] = Rat(u[i]);
    auto x = solve(sys, rhs);
    if (!x) throw Error("AxiomViolation", "vector outside the cone span");
    return *x;
}

int facet_sign(const Cone& upper, const Cone& lower) {
    if (upper.dim() == 1) return 1;  // against the zero cone
    const IMat ub = orientation_basis(upper);
    const IMat lb = orientation_basis(lower);
    // first ray of the cone off the facet's span, always on its positive side
    const IVec* v = nullptr;
    for (const auto& r : upper.rays()) {
        bool in_span = true;
        for (const auto& z : lower.span_equations())
            if (dot(z, r) != 0) {
                in_span = false;
                break;
            }
        if (!in_span) {
            v = &r;
            break;
        }
    }
    if (!v) throw Error("AxiomViolation", "facet spans the whole cone");
    QMat m;
    for (const auto& b : lb) m.push_back(coords_in(ub, b));
    m.push_back(coords_in(ub, *v));
    const int s = sign(det(m));
    if (s == 0) throw Error("AxiomViolation", "degenerate orientation comparison");
    return s;
}

}  // namespace

IncidenceFunction IncidenceFunction::build(const Fan& f) {
    IncidenceFunction eps;
    // facet pairs: dim gap 1 within the face relation, plus (ray, zero cone)
    std::vector<std::vector<size_t>> facets(f.size());
    for (auto [lo, hi] : f.face_relation())
        if (f.cone(lo).dim() + 1 == f.cone(hi).dim()) facets[hi].push_back(lo);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j : facets[i])
            eps.values_[{i, j}] = facet_sign(f.cone(i), f.cone(j));

    // diamond relation at every dim-gap-2 pair
    for (auto [lo, hi] : f.face_relation()) {
        if (f.cone(lo).dim() + 2 != f.cone(hi).dim()) continue;
        Int acc = 0;
        size_t count = 0;
        for (size_t mid : facets[hi])
            if (const int s1 = eps.sign_of(hi, mid)) {
                const int s2 = eps.sign_of(mid, lo);
                if (s2 != 0) {
                    acc += Int(s1) * s2;
                    ++count;
                }
            }
        if (count != 2 || acc != 0)
            throw Error("AxiomViolation", "diamond relation fails");
    }
    return eps;
}

int IncidenceFunction::sign_of(size_t upper, size_t lower) const {
    auto it = values_.find({upper, lower});
    return it == values_.end() ? 0 : it->second;
}

namespace {

FiniteChainComplex complex_on_cells(const Fan& f, const IncidenceFunction& eps,
                                    const std::vector<size_t>& cells) {
    FiniteChainComplex cc;
    cc.lo = -1;
    if (cells.empty()) return cc;

    size_t top = 0;
    bool with_aug = false;
    for (size_t i : cells) {
        top = std::max(top, f.cone(i).dim());
        if (f.cone(i).is_zero()) with_aug = true;
    }
    // basis[k] = cells at index k-1+lo ... keep per-level cone index lists
    std::vector<std::vector<size_t>> level(top + 1);
    for (size_t i : cells)
        if (!f.cone(i).is_zero()) level[f.cone(i).dim()].push_back(i);
    for (auto& l : level) std::sort(l.begin(), l.end());

    cc.dims.resize(top + 1);
    cc.dims[0] = with_aug ? 1 : 0;
    for (size_t k = 1; k <= top; ++k) cc.dims[k] = level[k].size();

    cc.diff.resize(top + 1);
    for (size_t k = 2; k <= top; ++k) {
        IMat m(level[k - 1].size(), IVec(level[k].size(), Int(0)));
        for (size_t col = 0; col < level[k].size(); ++col)
            for (size_t row = 0; row < level[k - 1].size(); ++row)
                m[row][col] = eps.sign_of(level[k][col], level[k - 1][row]);
        cc.diff[k] = std::move(m);
    }
    if (top >= 1) {
        // augmentation row: every ray maps to the class of the zero cone
        IMat m(with_aug ? 1 : 0, IVec(level[1].size(), Int(1)));
        cc.diff[1] = std::move(m);
    }
    return cc;
}

}  // namespace

FiniteChainComplex chain_complex(const Fan& f, const IncidenceFunction& eps) {
    std::vector<size_t> all(f.size());
    for (size_t i = 0; i < f.size(); ++i) all[i] = i;
    return complex_on_cells(f, eps, all);
}

FiniteChainComplex relative_complex(const Fan& f, const IncidenceFunction& eps,
                                    const std::vector<size_t>& star_cells) {
    return complex_on_cells(f, eps, star_cells);
}

FiniteChainComplex relative_star_complex(const Fan& f, const IncidenceFunction& eps,
                                         const Cone& c) {
    return complex_on_cells(f, eps, f.star(f.require_index(c)));
}

SimplicialComplex order_complex(const Fan& f, size_t i) {
    std::vector<size_t> verts;
    for (size_t s : f.star(i))
        if (s != i) verts.push_back(s);
    std::sort(verts.begin(), verts.end());

    SimplicialComplex sc;
    sc.nverts = verts.size();
    sc.faces.push_back({});  // filled below; faces[0] = vertices
    std::vector<std::vector<bool>> below(verts.size(),
                                         std::vector<bool>(verts.size(), false));
    for (size_t a = 0; a < verts.size(); ++a)
        for (size_t b = 0; b < verts.size(); ++b)
            if (a != b) below[a][b] = f.cone(verts[b]).contains(f.cone(verts[a]));

    // chains by DFS, extending with larger poset elements only
    std::vector<std::vector<size_t>> frontier;
    for (size_t a = 0; a < verts.size(); ++a) frontier.push_back({a});
    while (!frontier.empty()) {
        sc.faces.back() = frontier;
        std::vector<std::vector<size_t>> next;
        for (const auto& chain : frontier)
            for (size_t b = chain.back() + 1; b < verts.size(); ++b)
                if (below[chain.back()][b] || below[b][chain.back()]) {
                    // chains are stored sorted by index; require comparability
                    bool ok = true;
                    for (size_t a : chain)
                        if (!below[a][b] && !below[b][a]) {
                            ok = false;
                            break;
                        }
                    if (ok) {
                        auto c2 = chain;
                        c2.push_back(b);
                        next.push_back(std::move(c2));
                    }
                }
        if (next.empty()) break;
        sc.faces.push_back({});
        frontier = std::move(next);
    }
    if (sc.faces.size() == 1 && sc.faces[0].empty()) sc.faces.clear();
    return sc;
}

FiniteChainComplex simplicial_chain_complex(const SimplicialComplex& sc) {
    FiniteChainComplex cc;
    cc.lo = -1;
    cc.dims.push_back(1);  // the empty face; {∅} is never void here
    cc.diff.push_back({});
    std::map<std::vector<size_t>, size_t> index_of;
    for (size_t k = 0; k < sc.faces.size(); ++k) {
        const auto& level = sc.faces[k];
        cc.dims.push_back(level.size());
        IMat m(cc.dims[k], IVec(level.size(), Int(0)));
        std::map<std::vector<size_t>, size_t> this_level;
        for (size_t col = 0; col < level.size(); ++col) {
            this_level[level[col]] = col;
            if (k == 0) {
                m[0][col] = 1;  // augmentation
                continue;
            }
            for (size_t drop = 0; drop < level[col].size(); ++drop) {
                std::vector<size_t> sub = level[col];
                sub.erase(sub.begin() + drop);
                auto it = index_of.find(sub);
                if (it == index_of.end())
                    throw Error("NotAComplex", "face set not closed under subsets");
                m[it->second][col] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        cc.diff.push_back(std::move(m));
        index_of = std::move(this_level);
    }
    return cc;
}

namespace {

std::vector<size_t> hom_dims(const FiniteChainComplex& cc, const FieldSpec& field,
                             bool transpose) {
    // verify d∘d = 0 on the integer matrices
    for (size_t k = 0; k + 1 < cc.diff.size(); ++k) {
        const IMat& a = cc.diff[k];
        const IMat& b = cc.diff[k + 1];
        if (a.empty() || b.empty()) continue;
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < ncols(b); ++j) {
                Int acc = 0;
                for (size_t p = 0; p < b.size(); ++p) acc += a[i][p] * b[p][j];
                if (acc != 0) throw Error("NotAComplex", "boundary squared is nonzero");
            }
    }
    std::vector<size_t> out(cc.dims.size(), 0);
    std::vector<size_t> rk(cc.dims.size() + 1, 0);
    for (size_t k = 0; k < cc.diff.size(); ++k) {
        IMat m = cc.diff[k];
        if (transpose) {
            IMat t(ncols(m), IVec(m.size()));
            for (size_t i = 0; i < m.size(); ++i)
                for (size_t j = 0; j < ncols(m); ++j) t[j][i] = m[i][j];
            m = std::move(t);
        }
        rk[k] = m.empty() ? 0 : rank(m, field);
    }
    for (size_t k = 0; k < cc.dims.size(); ++k) {
        const size_t r_out = rk[k], r_in = (k + 1 < cc.diff.size()) ? rk[k + 1] : 0;
        out[k] = cc.dims[k] - r_out - r_in;
    }
    return out;
}

}  // namespace

std::vector<size_t> homology_dims(const FiniteChainComplex& cc, const FieldSpec& field) {
    return hom_dims(cc, field, false);
}

std::vector<size_t> cohomology_dims(const FiniteChainComplex& cc, const FieldSpec& field) {
    return hom_dims(cc, field, true);
}

}  // namespace tfr
