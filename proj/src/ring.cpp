#include "tfr/ring.hpp"

#include "tfr/lp.hpp"

#include <algorithm>
#include <set>

namespace tfr {

namespace {

// Canonical field representative: reduce mod p for prime fields.
Rat normalize_scalar(const Rat& c, const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::rationals) return c;
    Int num = numerator(c) % field.p;
    if (num < 0) num += field.p;
    Int den = denominator(c) % field.p;
    if (den == 0) throw Error("BadScalar", "denominator vanishes mod p");
    return Rat((num * mod_inverse(den, field.p)) % field.p);
}

}  // namespace

RingElement::RingElement(const MonoidalComplex* mc, FieldSpec field)
    : mc_(mc), field_(field) {}

RingElement RingElement::monomial(const MonoidalComplex* mc, FieldSpec field,
                                  const IVec& degree, Rat coeff) {
    if (!mc->contains(degree))
        throw Error("DegreeOutsideSupport", "degree " + to_string(degree));
    RingElement e(mc, field);
    e.add_term(degree, coeff);
    return e;
}

RingElement RingElement::one(const MonoidalComplex* mc, FieldSpec field) {
    return monomial(mc, field, IVec(mc->fan.ambient_dim(), Int(0)));
}

void RingElement::add_term(const IVec& degree, const Rat& coeff) {
    Rat c = normalize_scalar(terms_[degree] + coeff, field_);
    if (c == 0)
        terms_.erase(degree);
    else
        terms_[degree] = c;
}

RingElement RingElement::operator+(const RingElement& other) const {
    if (mc_ != other.mc_ || !(field_ == other.field_))
        throw Error("MixedComplex", "operands from different rings");
    RingElement out = *this;
    for (const auto& [deg, c] : other.terms_) out.add_term(deg, c);
    return out;
}

RingElement RingElement::operator*(const RingElement& other) const {
    if (mc_ != other.mc_ || !(field_ == other.field_))
        throw Error("MixedComplex", "operands from different rings");
    RingElement out(mc_, field_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            bool common = false;
            for (size_t i : mc_->fan.maximal())
                if (monoid_contains(mc_->monoids[i], a) &&
                    monoid_contains(mc_->monoids[i], b)) {
                    common = true;
                    break;
                }
            if (common) out.add_term(add(a, b), ca * cb);
        }
    return out;
}

bool RingElement::operator==(const RingElement& other) const {
    return mc_ == other.mc_ && field_ == other.field_ && terms_ == other.terms_;
}

GradedIdeal GradedIdeal::prime(const MonoidalComplex& mc, size_t cone_index) {
    if (cone_index >= mc.fan.size())
        throw Error("ConeNotInFan", "prime ideal index out of range");
    GradedIdeal id;
    id.mc_ = mc;
    id.kept_.fan = Fan::of_cone(mc.fan.cone(cone_index));
    id.kept_.monoids.assign(id.kept_.fan.size(), mc.monoids[cone_index]);
    // only the maximal entry is consulted; all point to M_C
    return id;
}

GradedIdeal GradedIdeal::radical(const MonoidalComplex& mc, const Fan& subfan) {
    GradedIdeal id;
    id.mc_ = mc;
    id.kept_.fan = subfan;
    for (const auto& c : subfan.cones()) {
        auto idx = mc.fan.index_of(c);
        if (!idx) throw Error("NotASubfan", "cone " + c.key() + " not in the fan");
        id.kept_.monoids.push_back(mc.monoids[*idx]);
    }
    return id;
}

GradedIdeal GradedIdeal::maximal(const MonoidalComplex& mc) {
    return prime(mc, mc.fan.require_index(Cone::zero(mc.fan.ambient_dim())));
}

bool GradedIdeal::contains_degree(const IVec& a) const {
    return mc_.contains(a) && !kept_.contains(a);
}

std::optional<std::string> check_ideal_identities(const MonoidalComplex& mc,
                                                  const std::vector<size_t>& cone_indices,
                                                  long box_radius) {
    if (cone_indices.empty()) return std::nullopt;
    const Fan& f = mc.fan;
    Cone meet = f.cone(cone_indices[0]);
    std::vector<GradedIdeal> ps;
    for (size_t i : cone_indices) {
        meet = meet.intersect(f.cone(i));
        ps.push_back(GradedIdeal::prime(mc, i));
    }
    GradedIdeal p_meet = GradedIdeal::prime(mc, f.require_index(meet));

    for (const IVec& a : box_points(f.ambient_dim(), box_radius)) {
        // p_{∩Ci} = Σ p_{Ci}: supports of sums of monomial ideals are unions
        bool in_sum = false;
        for (const auto& p : ps) in_sum = in_sum || p.contains_degree(a);
        if (p_meet.contains_degree(a) != in_sum)
            return "intersection/sum identity fails at " + to_string(a);

        // p_D + ∩ p_{Ci} = ∩ (p_D + p_{Ci}) for every D
        for (size_t d = 0; d < f.size(); ++d) {
            GradedIdeal pd = GradedIdeal::prime(mc, d);
            bool cap = true;
            for (const auto& p : ps) cap = cap && p.contains_degree(a);
            const bool lhs = pd.contains_degree(a) || cap;
            bool rhs = true;
            for (const auto& p : ps)
                rhs = rhs && (pd.contains_degree(a) || p.contains_degree(a));
            if (lhs != rhs)
                return "modular identity fails at " + to_string(a) + " with D index " +
                       std::to_string(d);
        }
    }
    return std::nullopt;
}

HilbertTable hilbert_table(const MonoidalComplex& mc, long box_radius) {
    HilbertTable t;
    t.box_radius = box_radius;
    for (const IVec& a : box_points(mc.fan.ambient_dim(), box_radius))
        t.entries[a] = mc.contains(a) ? 1 : 0;
    return t;
}

std::optional<Int> AdmissibleGrading::degree_of(const MonoidalComplex& mc,
                                                const IVec& a) const {
    for (size_t k = 0; k < max_cones.size(); ++k)
        if (monoid_contains(mc.monoids[max_cones[k]], a)) return dot(w[k], a);
    return std::nullopt;
}

std::optional<AdmissibleGrading> find_admissible_grading(const MonoidalComplex& mc) {
    const Fan& f = mc.fan;
    const size_t d = f.ambient_dim();
    const auto& maxc = f.maximal();
    if (maxc.empty()) return std::nullopt;

    LinearProgram lp;
    lp.nvars = d * maxc.size();
    auto var = [&](size_t k, size_t j) { return k * d + j; };
    for (size_t k = 0; k < maxc.size(); ++k)
        for (const auto& r : f.cone(maxc[k]).rays()) {
            QVec row(lp.nvars, Rat(0));
            for (size_t j = 0; j < d; ++j) row[var(k, j)] = Rat(r[j]);
            lp.add_ge(std::move(row), Rat(1));
        }
    for (size_t k1 = 0; k1 < maxc.size(); ++k1)
        for (size_t k2 = k1 + 1; k2 < maxc.size(); ++k2) {
            Cone shared = f.cone(maxc[k1]).intersect(f.cone(maxc[k2]));
            for (const auto& r : shared.rays()) {
                QVec row(lp.nvars, Rat(0));
                for (size_t j = 0; j < d; ++j) {
                    row[var(k1, j)] = Rat(r[j]);
                    row[var(k2, j)] -= Rat(r[j]);
                }
                lp.add_eq(std::move(row), Rat(0));
            }
        }
    auto x = feasible_point(lp);
    if (!x) return std::nullopt;

    Int scale = 1;
    for (const Rat& c : *x) scale = lcm(scale, denominator(c));
    AdmissibleGrading g;
    g.max_cones = maxc;
    g.w.assign(maxc.size(), IVec(d));
    for (size_t k = 0; k < maxc.size(); ++k)
        for (size_t j = 0; j < d; ++j)
            g.w[k][j] = numerator((*x)[var(k, j)] * Rat(scale));
    return g;
}

EmbeddingWitness omega_embedding_witness(const MonoidalComplex& mc,
                                         const AdmissibleGrading& grading,
                                         const std::map<size_t, IVec>& interior_choices,
                                         const std::vector<IVec>& omega_support) {
    EmbeddingWitness w;
    const Fan& f = mc.fan;
    for (size_t k = 0; k < grading.max_cones.size(); ++k) {
        auto it = interior_choices.find(grading.max_cones[k]);
        if (it == interior_choices.end())
            throw Error("NotInterior", "missing interior choice for a maximal cone");
        if (!f.cone(grading.max_cones[k]).relint_contains(it->second))
            throw Error("NotInterior", to_string(it->second) + " is not interior");
        w.interior_points.push_back(it->second);
        w.degrees.push_back(dot(grading.w[k], it->second));
    }
    w.h = 1;
    for (const Int& g : w.degrees) w.h = lcm(w.h, g);

    // each support degree sits in a unique maximal cone's relint side; map
    // it by the matching multiplier and watch for collisions
    std::set<IVec> images;
    w.injective_on_box = true;
    for (const IVec& a : omega_support) {
        std::optional<size_t> owner;
        for (size_t k = 0; k < grading.max_cones.size(); ++k)
            if (f.cone(grading.max_cones[k]).contains(a)) {
                owner = k;
                break;
            }
        if (!owner) {
            w.injective_on_box = false;
            continue;
        }
        IVec image = add(a, scaled(w.interior_points[*owner],
                                   Int(w.h / w.degrees[*owner])));
        if (!mc.contains(image) || !images.insert(image).second)
            w.injective_on_box = false;
    }
    return w;
}

}  // namespace tfr
