#pragma once

#include "tfr/cone.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tfr {

// Face-closed collection of pointed cones satisfying the common-face
// axiom. Cones are indexed; index 0 is the zero cone for nonempty fans.
// The empty fan (no cones at all) is a legal value.
class Fan {
public:
    static Fan from_maximal(const std::vector<Cone>& cones, size_t ambient_dim);
    static Fan empty(size_t ambient_dim);
    static Fan of_cone(const Cone& c);

    size_t ambient_dim() const { return ambient_dim_; }
    bool is_empty() const { return cones_.empty(); }
    size_t size() const { return cones_.size(); }
    // Dimension of the largest cone; 0 for the empty and trivial fans.
    size_t dim() const;
    bool pure() const;

    const Cone& cone(size_t i) const { return cones_[i]; }
    const std::vector<Cone>& cones() const { return cones_; }
    const std::vector<size_t>& maximal() const { return maximal_; }

    std::optional<size_t> index_of(const Cone& c) const;
    size_t require_index(const Cone& c) const;

    // Face relation as index pairs (i, j) with cone i a proper face of cone j.
    std::vector<std::pair<size_t, size_t>> face_relation() const;

    // Indices of cones containing cone i / containing the point a.
    std::vector<size_t> star(size_t i) const;
    std::vector<size_t> star_by_point(const IVec& a) const;

    // Subfan of all cones not containing cone i; empty fan for i = zero cone.
    Fan deletion(size_t i) const;

    // Subfan spanned by the given cones and all their faces.
    Fan subfan(const std::vector<size_t>& cone_indices) const;

    Fan intersection(const Fan& other) const;
    Fan fan_union(const Fan& other) const;
    bool is_subfan_of(const Fan& other) const;

    bool contains_point(const IVec& a) const;

    Fan negated() const;

private:
    Fan() = default;

    size_t ambient_dim_ = 0;
    std::vector<Cone> cones_;
    std::vector<size_t> maximal_;
    std::map<std::string, size_t> index_;
};

// Fan of all proper faces of c; pure of dimension dim(c) - 1.
// Throws ZeroCone for the zero cone.
Fan boundary_fan(const Cone& c);

// Image fan of star(f, i) under the integral projection along cone i,
// with the order isomorphism star-cone-index -> quotient-fan-index.
struct QuotientFan {
    Fan fan;
    std::vector<std::pair<size_t, size_t>> index_map;
};
QuotientFan quotient_fan(const Fan& f, size_t i);

}  // namespace tfr
