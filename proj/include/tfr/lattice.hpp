#pragma once

#include "tfr/fan.hpp"

#include <map>
#include <string>
#include <vector>

namespace tfr {

// Affine monoid in Z^d, either C ∩ Z^d (normal, no generator list needed)
// or generated by an explicit list with cn(generators) = cone.
struct AffineMonoid {
    Cone cone = Cone::zero(0);
    IMat generators;  // ignored when normal
    bool normal = false;

    static AffineMonoid normal_in(const Cone& c);
    static AffineMonoid generated_by(const IMat& gens, size_t ambient_dim);
};

// Membership. Normal monoids: cone membership of an integer point. General
// monoids: bounded search for a nonnegative integer combination; the bound
// comes from a strictly positive functional on the cone, so the search is
// exhaustive.
bool monoid_contains(const AffineMonoid& m, const IVec& a);

// One monoid per cone of the fan, indexed like the fan.
struct MonoidalComplex {
    Fan fan = Fan::empty(0);
    std::vector<AffineMonoid> monoids;

    bool contains(const IVec& a) const;  // a ∈ some M_C
};

// The complex of all C ∩ Z^d.
MonoidalComplex normal_complex(const Fan& f);

// Compatibility check: cn(M_C) = C for every cone, and M_{C'} = M_C ∩ C'
// for faces — exact in the normal case, otherwise on the lattice points of
// sup-norm at most box_radius (the report says which).
struct ValidationReport {
    bool valid = true;
    bool exact = true;
    long box_radius = 0;
    std::vector<std::string> violations;
};
ValidationReport validate_monoidal_complex(const MonoidalComplex& mc, long box_radius);

// Integer points of the cone (or its relative interior) with sup-norm at
// most box_radius, in lexicographic order.
std::vector<IVec> lattice_points(const Cone& c, long box_radius, bool relint = false);

// All integer points of the box, lexicographic.
std::vector<IVec> box_points(size_t dim, long box_radius);

}  // namespace tfr
