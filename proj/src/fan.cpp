#include "tfr/fan.hpp"

#include <algorithm>

namespace tfr {

namespace {

// Deterministic cone order: by dimension, then canonical key.
bool cone_less(const Cone& a, const Cone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.key() < b.key();
}

}  // namespace

Fan Fan::empty(size_t ambient_dim) {
    Fan f;
    f.ambient_dim_ = ambient_dim;
    return f;
}

Fan Fan::of_cone(const Cone& c) { return from_maximal({c}, c.ambient_dim()); }

Fan Fan::from_maximal(const std::vector<Cone>& input, size_t ambient_dim) {
    Fan f;
    f.ambient_dim_ = ambient_dim;
    if (input.empty()) return f;

    std::map<std::string, Cone> all;
    for (const auto& c : input) {
        if (c.ambient_dim() != ambient_dim)
            throw Error("DimensionMismatch", "cone in wrong ambient space");
        for (auto& face : c.faces()) all.emplace(face.key(), std::move(face));
    }
    for (auto& [k, c] : all) f.cones_.push_back(std::move(c));
    std::sort(f.cones_.begin(), f.cones_.end(), cone_less);
    for (size_t i = 0; i < f.cones_.size(); ++i) f.index_[f.cones_[i].key()] = i;

    for (size_t i = 0; i < f.cones_.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < f.cones_.size() && maximal; ++j)
            if (i != j && f.cones_[j].contains(f.cones_[i]) &&
                f.cones_[i].dim() < f.cones_[j].dim())
                maximal = false;
        if (maximal && !(f.cones_[i].is_zero() && f.cones_.size() > 1))
            f.maximal_.push_back(i);
    }

    // common-face axiom on pairs of maximal cones (implies it for all pairs)
    for (size_t a = 0; a < f.maximal_.size(); ++a)
        for (size_t b = a + 1; b < f.maximal_.size(); ++b) {
            const Cone& ca = f.cones_[f.maximal_[a]];
            const Cone& cb = f.cones_[f.maximal_[b]];
            Cone meet = ca.intersect(cb);
            if (!meet.is_face_of(ca) || !meet.is_face_of(cb))
                throw Error("NotAFan", "cones " + ca.key() + " and " + cb.key() +
                                           " do not meet in a common face");
        }
    return f;
}

size_t Fan::dim() const {
    size_t d = 0;
    for (const auto& c : cones_) d = std::max(d, c.dim());
    return d;
}

bool Fan::pure() const {
    const size_t d = dim();
    for (size_t i : maximal_)
        if (cones_[i].dim() != d) return false;
    return true;
}

std::optional<size_t> Fan::index_of(const Cone& c) const {
    auto it = index_.find(c.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

size_t Fan::require_index(const Cone& c) const {
    auto i = index_of(c);
    if (!i) throw Error("ConeNotInFan", "cone " + c.key() + " is not in the fan");
    return *i;
}

std::vector<std::pair<size_t, size_t>> Fan::face_relation() const {
    std::vector<std::pair<size_t, size_t>> rel;
    for (size_t i = 0; i < cones_.size(); ++i)
        for (size_t j = 0; j < cones_.size(); ++j)
            if (i != j && cones_[i].dim() < cones_[j].dim() &&
                cones_[j].contains(cones_[i]))
                rel.emplace_back(i, j);
    return rel;
}

std::vector<size_t> Fan::star(size_t i) const {
    if (i >= cones_.size()) throw Error("ConeNotInFan", "index out of range");
    std::vector<size_t> s;
    for (size_t j = 0; j < cones_.size(); ++j)
        if (cones_[j].contains(cones_[i])) s.push_back(j);
    return s;
}

std::vector<size_t> Fan::star_by_point(const IVec& a) const {
    std::vector<size_t> s;
    for (size_t j = 0; j < cones_.size(); ++j)
        if (cones_[j].contains(a)) s.push_back(j);
    return s;
}

Fan Fan::deletion(size_t i) const {
    if (i >= cones_.size()) throw Error("ConeNotInFan", "index out of range");
    std::vector<size_t> in_star = star(i);
    std::vector<bool> removed(cones_.size(), false);
    for (size_t j : in_star) removed[j] = true;
    std::vector<Cone> keep;
    for (size_t j = 0; j < cones_.size(); ++j)
        if (!removed[j]) keep.push_back(cones_[j]);
    if (keep.empty()) return empty(ambient_dim_);
    return from_maximal(keep, ambient_dim_);
}

Fan Fan::subfan(const std::vector<size_t>& cone_indices) const {
    std::vector<Cone> cs;
    for (size_t i : cone_indices) {
        if (i >= cones_.size()) throw Error("ConeNotInFan", "index out of range");
        cs.push_back(cones_[i]);
    }
    if (cs.empty()) return empty(ambient_dim_);
    return from_maximal(cs, ambient_dim_);
}

Fan Fan::intersection(const Fan& other) const {
    std::vector<Cone> common;
    for (const auto& c : cones_)
        if (other.index_of(c)) common.push_back(c);
    if (common.empty()) return empty(ambient_dim_);
    return from_maximal(common, ambient_dim_);
}

Fan Fan::fan_union(const Fan& other) const {
    std::vector<Cone> cs = cones_;
    for (const auto& c : other.cones_) cs.push_back(c);
    if (cs.empty()) return empty(ambient_dim_);
    return from_maximal(cs, ambient_dim_);
}

bool Fan::is_subfan_of(const Fan& other) const {
    for (const auto& c : cones_)
        if (!other.index_of(c)) return false;
    return true;
}

bool Fan::contains_point(const IVec& a) const {
    for (size_t i : maximal_)
        if (cones_[i].contains(a)) return true;
    return false;
}

Fan Fan::negated() const {
    if (is_empty()) return *this;
    std::vector<Cone> cs;
    for (size_t i : maximal_) cs.push_back(cones_[i].negated());
    return from_maximal(cs, ambient_dim_);
}

Fan boundary_fan(const Cone& c) {
    if (c.is_zero()) throw Error("ZeroCone", "the zero cone has no boundary fan");
    std::vector<Cone> proper;
    for (auto& f : c.faces())
        if (f.dim() < c.dim()) proper.push_back(std::move(f));
    return Fan::from_maximal(proper, c.ambient_dim());
}

QuotientFan quotient_fan(const Fan& f, size_t i) {
    if (i >= f.size()) throw Error("ConeNotInFan", "index out of range");
    const Cone& c = f.cone(i);
    const size_t d = f.ambient_dim();
    const IMat proj = lattice_projection(c.rays(), d);
    const size_t qdim = proj.size();

    auto project = [&](const IVec& v) {
        IVec w(qdim);
        for (size_t k = 0; k < qdim; ++k) w[k] = dot(proj[k], v);
        return w;
    };

    const std::vector<size_t> star = f.star(i);
    std::vector<Cone> images;
    std::vector<size_t> star_maximal;
    for (size_t s : star) {
        bool maximal = true;
        for (size_t t : star)
            if (t != s && f.cone(t).contains(f.cone(s)) &&
                f.cone(s).dim() < f.cone(t).dim())
                maximal = false;
        if (maximal) star_maximal.push_back(s);
    }
    for (size_t s : star_maximal) {
        IMat gens;
        for (const auto& r : f.cone(s).rays()) gens.push_back(project(r));
        try {
            images.push_back(Cone::from_generators(gens, qdim));
        } catch (const Error& e) {
            if (e.code() == "NotPointed")
                throw Error("ProjectionDegenerate",
                            "image of cone " + f.cone(s).key() + " is not pointed");
            throw;
        }
    }
    QuotientFan q{Fan::from_maximal(images, qdim), {}};

    for (size_t s : star) {
        IMat gens;
        for (const auto& r : f.cone(s).rays()) gens.push_back(project(r));
        Cone img = Cone::from_generators(gens, qdim);
        q.index_map.emplace_back(s, q.fan.require_index(img));
    }
    return q;
}

}  // namespace tfr
