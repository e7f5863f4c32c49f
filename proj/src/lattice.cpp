#include "tfr/lattice.hpp"

#include "tfr/lp.hpp"

#include <algorithm>

namespace tfr {

AffineMonoid AffineMonoid::normal_in(const Cone& c) {
    AffineMonoid m;
    m.cone = c;
    m.normal = true;
    return m;
}

AffineMonoid AffineMonoid::generated_by(const IMat& gens, size_t ambient_dim) {
    AffineMonoid m;
    m.cone = Cone::from_generators(gens, ambient_dim);
    for (const auto& g : gens)
        if (!is_zero(g)) m.generators.push_back(g);
    std::sort(m.generators.begin(), m.generators.end());
    m.generators.erase(std::unique(m.generators.begin(), m.generators.end()),
                       m.generators.end());
    return m;
}

namespace {

bool combination_exists(const IMat& gens, size_t i, const IVec& a,
                        const QVec& w, const Rat& budget) {
    if (is_zero(a)) return true;
    if (i == gens.size()) return false;
    // bound on the coefficient of gens[i]: w is strictly positive on the
    // cone, so n * w(g_i) ≤ w(a)
    const Rat wg = dot(to_rational(gens[i]), w);
    IVec rest = a;
    for (Int n = 0; Rat(n) * wg <= budget; ++n) {
        if (combination_exists(gens, i + 1, rest, w, budget - Rat(n) * wg))
            return true;
        rest = sub(rest, gens[i]);
    }
    return false;
}

}  // namespace

bool monoid_contains(const AffineMonoid& m, const IVec& a) {
    if (m.normal) return m.cone.contains(a);
    if (!m.cone.contains(a)) return false;
    if (is_zero(a)) return true;
    auto w = strictly_positive_functional(m.generators, a.size());
    if (!w) throw Error("NotPointed", "monoid cone contains a line");
    return combination_exists(m.generators, 0, a, *w, dot(to_rational(a), *w));
}

bool MonoidalComplex::contains(const IVec& a) const {
    for (size_t i : fan.maximal())
        if (monoid_contains(monoids[i], a)) return true;
    return false;
}

MonoidalComplex normal_complex(const Fan& f) {
    MonoidalComplex mc;
    mc.fan = f;
    for (const auto& c : f.cones()) mc.monoids.push_back(AffineMonoid::normal_in(c));
    return mc;
}

ValidationReport validate_monoidal_complex(const MonoidalComplex& mc, long box_radius) {
    ValidationReport rep;
    rep.box_radius = box_radius;
    const Fan& f = mc.fan;
    if (mc.monoids.size() != f.size()) {
        rep.valid = false;
        rep.violations.push_back("one monoid required per cone");
        return rep;
    }
    for (size_t i = 0; i < f.size(); ++i)
        if (!(mc.monoids[i].cone == f.cone(i))) {
            rep.valid = false;
            rep.violations.push_back("cone of monoid " + std::to_string(i) +
                                     " differs from fan cone");
        }
    for (auto [lo, hi] : f.face_relation()) {
        const AffineMonoid& small = mc.monoids[lo];
        const AffineMonoid& big = mc.monoids[hi];
        if (small.normal && big.normal) continue;  // C'∩Z^d = (C∩Z^d)∩C' exactly
        rep.exact = false;
        for (const IVec& a : lattice_points(f.cone(hi), box_radius)) {
            const bool in_small = monoid_contains(small, a);
            const bool in_face = f.cone(lo).contains(a) && monoid_contains(big, a);
            if (in_small != in_face) {
                rep.valid = false;
                rep.violations.push_back("face condition fails for cones " +
                                         std::to_string(lo) + " ⊂ " + std::to_string(hi) +
                                         " at " + to_string(a));
            }
        }
    }
    return rep;
}

std::vector<IVec> box_points(size_t dim, long box_radius) {
    std::vector<IVec> out;
    IVec cur(dim, Int(-box_radius));
    if (dim == 0) return {IVec{}};
    while (true) {
        out.push_back(cur);
        size_t i = dim;
        while (i-- > 0) {
            if (cur[i] < box_radius) {
                ++cur[i];
                for (size_t j = i + 1; j < dim; ++j) cur[j] = -box_radius;
                break;
            }
            if (i == 0) return out;
        }
    }
}

std::vector<IVec> lattice_points(const Cone& c, long box_radius, bool relint) {
    std::vector<IVec> out;
    for (IVec& a : box_points(c.ambient_dim(), box_radius))
        if (relint ? c.relint_contains(a) : c.contains(a)) out.push_back(std::move(a));
    return out;
}

}  // namespace tfr
