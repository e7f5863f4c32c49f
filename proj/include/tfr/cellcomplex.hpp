#pragma once

#include "tfr/fan.hpp"
#include "tfr/linalg.hpp"

#include <map>
#include <vector>

namespace tfr {

// Signs epsilon(C, C') in {+1,-1} for each facet pair of cones of a fan,
// with the zero cone counted as the facet of every ray at sign +1.
// Construction chooses an orientation per cone (lex-least independent ray
// tuple) and compares determinants; all axioms are then verified:
//   - nonzero exactly on facet pairs,
//   - the diamond relation on every dim-gap-2 pair,
//   - +1 against the zero cone.
class IncidenceFunction {
public:
    static IncidenceFunction build(const Fan& f);

    // 0 when (upper, lower) is not a facet pair.
    int sign_of(size_t upper, size_t lower) const;

private:
    std::map<std::pair<size_t, size_t>, int> values_;
};

// Chain complex concentrated in indices lo .. lo+dims.size()-1.
// diff[k] is the boundary C_{lo+k} -> C_{lo+k-1}, stored with one row per
// target basis element; diff[0] maps to zero and is empty.
struct FiniteChainComplex {
    int lo = 0;
    std::vector<size_t> dims;
    std::vector<IMat> diff;

    int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
    size_t dim_at(int i) const {
        return (i < lo || i > hi()) ? 0 : dims[size_t(i - lo)];
    }
};

// Augmented oriented chain complex of the cell complex of f: index i is
// spanned by the cones of dimension i+1, index -1 by the augmentation.
// The empty fan gives the zero complex.
FiniteChainComplex chain_complex(const Fan& f, const IncidenceFunction& eps);

// Quotient of chain_complex(f) by the subcomplex of the given cells'
// complement: basis = cells among `star_cells`, augmentation kept exactly
// when the zero cone is among them.
FiniteChainComplex relative_complex(const Fan& f, const IncidenceFunction& eps,
                                    const std::vector<size_t>& star_cells);

// Relative complex of the star of cone c; its homology is the reduced
// homology of the star's cell complex. Throws ConeNotInFan.
FiniteChainComplex relative_star_complex(const Fan& f, const IncidenceFunction& eps,
                                         const Cone& c);

// Abstract simplicial complex; faces listed exhaustively, sorted, closed
// under subsets. faces[k] holds the k-vertex faces (so faces[0] = vertices).
struct SimplicialComplex {
    size_t nverts = 0;
    std::vector<std::vector<std::vector<size_t>>> faces;
};

// Order complex of the star of cone index i with the base cone removed:
// vertices are the remaining star cones, faces are the chains.
SimplicialComplex order_complex(const Fan& f, size_t i);

// Augmented simplicial chain complex; index -1 carries the empty face.
FiniteChainComplex simplicial_chain_complex(const SimplicialComplex& sc);

// Reduced (co)homology dimensions over the field, indexed from cc.lo.
// Cohomology is computed from the transposed matrices; over a field the
// dimensions agree with homology. Throws NotAComplex if d.d != 0.
std::vector<size_t> homology_dims(const FiniteChainComplex& cc, const FieldSpec& field);
std::vector<size_t> cohomology_dims(const FiniteChainComplex& cc, const FieldSpec& field);

}  // namespace tfr
