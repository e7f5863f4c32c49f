#pragma once

#include "tfr/linalg.hpp"

#include <compare>
#include <string>
#include <vector>

namespace tfr {

// Rational pointed cone with both descriptions held canonically:
// extreme rays are primitive and lex-sorted, facet forms primitive.
// Membership: span_equations vanish and facet_forms are >= 0.
class Cone {
public:
    // Pointed cone generated by `gens` (rows). Throws NotPointed if the
    // conical hull contains a line. Empty input gives the zero cone.
    static Cone from_generators(const IMat& gens, size_t ambient_dim);

    // Pointed cone { x : eqs·x = 0, ineqs·x >= 0 } via ray enumeration.
    static Cone from_constraints(const IMat& eqs, const IMat& ineqs, size_t ambient_dim);

    static Cone zero(size_t ambient_dim);

    size_t ambient_dim() const { return ambient_dim_; }
    size_t dim() const { return dim_; }
    bool is_zero() const { return dim_ == 0; }

    const IMat& rays() const { return rays_; }
    const IMat& facet_forms() const { return facet_forms_; }
    const IMat& span_equations() const { return span_equations_; }

    bool contains(const IVec& a) const;
    bool contains(const QVec& a) const;
    bool contains(const Cone& other) const;
    bool relint_contains(const IVec& a) const;

    // A lattice point in the relative interior (the sum of the rays).
    IVec relint_point() const;

    // All faces including the zero cone and the cone itself.
    std::vector<Cone> faces() const;

    Cone intersect(const Cone& other) const;
    bool is_face_of(const Cone& other) const;

    Cone negated() const;

    bool operator==(const Cone& other) const;
    // Canonical identity string (dim plus sorted ray list).
    std::string key() const;

private:
    Cone() = default;

    size_t ambient_dim_ = 0;
    size_t dim_ = 0;
    IMat rays_;
    IMat facet_forms_;
    IMat span_equations_;
};

}  // namespace tfr
