#include "tfr/cohomology.hpp"

#include "tfr/lattice.hpp"

#include <algorithm>

namespace tfr {

GradedPiece local_cohomology_at(const Fan& f, const IncidenceFunction& eps,
                                const IVec& a, const FieldSpec& field) {
    GradedPiece out;
    out.degree = a;
    out.dims.assign(f.dim() + 1, 0);
    auto star = f.star_by_point(negated(a));
    if (star.empty()) return out;
    auto h = cohomology_dims(relative_complex(f, eps, star), field);
    // H^i_m ≅ H̃^{i-1} of the star cells; index -1 sits at h[0]
    for (size_t i = 0; i < out.dims.size() && i < h.size(); ++i) out.dims[i] = h[i];
    return out;
}

GradedPiece direct_Dcomplex_piece(const Fan& f, const IncidenceFunction& eps,
                                  const IVec& a, const FieldSpec& field) {
    GradedPiece out;
    out.degree = a;
    const size_t k = f.dim();
    out.dims.assign(k + 1, 0);

    // surviving components per cohomological index t = dim C
    std::vector<std::vector<size_t>> comp(k + 1);
    for (size_t i = 0; i < f.size(); ++i) {
        const Cone& c = f.cone(i);
        if (c.is_zero()) {
            if (is_zero(a)) comp[0].push_back(i);
        } else if (c.negated().contains(a)) {
            comp[c.dim()].push_back(i);
        }
    }
    // coboundary d^t : slice_t -> slice_{t+1} via the incidence signs
    std::vector<size_t> rk(k + 1, 0);  // rk[t] = rank of d^t
    for (size_t t = 0; t < k; ++t) {
        if (comp[t].empty() || comp[t + 1].empty()) continue;
        IMat m(comp[t + 1].size(), IVec(comp[t].size(), Int(0)));
        for (size_t row = 0; row < comp[t + 1].size(); ++row)
            for (size_t col = 0; col < comp[t].size(); ++col)
                m[row][col] = eps.sign_of(comp[t + 1][row], comp[t][col]);
        rk[t] = rank(m, field);
    }
    for (size_t t = 0; t <= k; ++t) {
        const size_t in = (t > 0) ? rk[t - 1] : 0;
        out.dims[t] = comp[t].size() - rk[t] - in;
    }
    return out;
}

CohomologyTable hochster_table(const Fan& f, const FieldSpec& field) {
    CohomologyTable t;
    t.fan_dim = f.dim();
    t.entries.assign(f.size(), std::vector<size_t>(t.fan_dim + 1, 0));
    for (size_t c = 0; c < f.size(); ++c) {
        auto h = cohomology_dims(simplicial_chain_complex(order_complex(f, c)), field);
        const size_t shift = f.cone(c).dim();
        // column i holds dim H̃^{i - dim C - 1}(Δ(str C)); h[j] is index j-1
        for (size_t i = 0; i <= t.fan_dim; ++i) {
            const long j = long(i) - long(shift);  // = (i - dim C - 1) + 1
            if (j >= 0 && size_t(j) < h.size()) t.entries[c][i] = h[size_t(j)];
        }
    }
    t.depth = t.fan_dim + 1;
    for (size_t i = 0; i <= t.fan_dim && t.depth > t.fan_dim; ++i)
        for (const auto& row : t.entries)
            if (row[i]) {
                t.depth = i;
                break;
            }
    t.cm = (t.depth == t.fan_dim);
    return t;
}

size_t depth(const Fan& f, const FieldSpec& field) { return hochster_table(f, field).depth; }

bool is_cohen_macaulay(const Fan& f, const FieldSpec& field) {
    CohomologyTable t = hochster_table(f, field);
    if (t.cm && !f.pure())
        throw Error("PurityViolated", "Cohen-Macaulay fan must be pure");
    return t.cm;
}

size_t canonical_module_dim_at(const Fan& f, const IncidenceFunction& eps,
                               const CohomologyTable& table, const IVec& a,
                               const FieldSpec& field) {
    if (!table.cm)
        throw Error("NotCohenMacaulay", "canonical module needs a Cohen-Macaulay ring");
    const size_t k = f.dim();
    if (k == 0) return is_zero(a) ? 1 : 0;

    auto slice = [&](size_t t) {
        std::vector<size_t> comp;
        for (size_t i = 0; i < f.size(); ++i) {
            const Cone& c = f.cone(i);
            if (c.dim() != t) continue;
            if (c.is_zero() ? is_zero(a) : c.contains(a)) comp.push_back(i);
        }
        return comp;
    };
    const auto top = slice(k), below = slice(k - 1);
    if (top.empty()) return 0;
    if (below.empty()) return top.size();
    IMat m(below.size(), IVec(top.size(), Int(0)));
    for (size_t row = 0; row < below.size(); ++row)
        for (size_t col = 0; col < top.size(); ++col)
            m[row][col] = eps.sign_of(top[col], below[row]);
    return top.size() - rank(m, field);
}

MayerVietorisReport mayer_vietoris_check(const Fan& f, const Fan& f1, const Fan& f2,
                                         long box_radius, const FieldSpec& field) {
    MayerVietorisReport rep;
    if (!f1.is_subfan_of(f) || !f2.is_subfan_of(f) ||
        f1.fan_union(f2).size() != f.size()) {
        rep.ok = false;
        rep.message = "fan is not the union of the two subfans";
        return rep;
    }
    Fan meet = f1.intersection(f2);
    std::vector<const Fan*> fans = {&f, &f1, &f2, &meet};
    std::vector<IncidenceFunction> eps;
    std::vector<long> sgn = {1, -1, -1, 1};
    for (const Fan* g : fans)
        eps.push_back(g->is_empty() ? IncidenceFunction{} : IncidenceFunction::build(*g));

    for (const IVec& a : box_points(f.ambient_dim(), box_radius)) {
        Int acc = 0;
        for (size_t j = 0; j < fans.size(); ++j) {
            auto piece = local_cohomology_at(*fans[j], eps[j], a, field);
            for (size_t i = 0; i < piece.dims.size(); ++i)
                acc += Int(sgn[j]) * ((i % 2 == 0) ? Int(piece.dims[i]) : -Int(piece.dims[i]));
        }
        if (acc != 0) {
            rep.ok = false;
            rep.first_failure = a;
            rep.message = "alternating sum is " + acc.str() + " at " + to_string(a);
            return rep;
        }
    }
    rep.message = "identity holds on the box";
    return rep;
}

}  // namespace tfr
