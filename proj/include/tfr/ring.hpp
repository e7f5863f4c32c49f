#pragma once

#include "tfr/lattice.hpp"

#include <map>
#include <optional>

namespace tfr {

// Element of the face ring of a monoidal complex: finitely many terms
// c_a x^a with every degree a in the union of the monoids. Coefficients
// live in the given field (residues 0..p-1 for prime fields).
class RingElement {
public:
    RingElement(const MonoidalComplex* mc, FieldSpec field);

    static RingElement monomial(const MonoidalComplex* mc, FieldSpec field,
                                const IVec& degree, Rat coeff = Rat(1));
    static RingElement one(const MonoidalComplex* mc, FieldSpec field);

    const std::map<IVec, Rat>& terms() const { return terms_; }
    bool is_zero_element() const { return terms_.empty(); }

    RingElement operator+(const RingElement& other) const;
    // x^a x^b = x^{a+b} when a and b lie in a common cone's monoid, else 0.
    RingElement operator*(const RingElement& other) const;
    bool operator==(const RingElement& other) const;

private:
    void add_term(const IVec& degree, const Rat& coeff);

    const MonoidalComplex* mc_;
    FieldSpec field_;
    std::map<IVec, Rat> terms_;
};

// Z^d-graded radical ideal given by its monomial support predicate:
// prime(C) contains x^a iff a ∉ M_C; radical(Σ') iff a ∉ |M_{Σ'}|.
class GradedIdeal {
public:
    static GradedIdeal prime(const MonoidalComplex& mc, size_t cone_index);
    static GradedIdeal radical(const MonoidalComplex& mc, const Fan& subfan);
    static GradedIdeal maximal(const MonoidalComplex& mc);  // p_{zero cone}

    // Membership of the monomial x^a; false when a ∉ |M_Σ| (no monomial).
    bool contains_degree(const IVec& a) const;

private:
    GradedIdeal() = default;
    MonoidalComplex mc_;
    MonoidalComplex kept_;  // monomials of the quotient
};

// Both support identities on monomial ideals, checked within the box:
//   p_{C1∩...∩Cj} = p_{C1}+...+p_{Cj}
//   p_D + (p_{C1}∩...∩p_{Cj}) = (p_D+p_{C1})∩...∩(p_D+p_{Cj})  for all D
// Returns a failure witness or nullopt on success.
std::optional<std::string> check_ideal_identities(const MonoidalComplex& mc,
                                                  const std::vector<size_t>& cone_indices,
                                                  long box_radius);

// Fine Hilbert data on the box: entry(a) = dim_K K[M_Σ]_a ∈ {0,1}.
struct HilbertTable {
    long box_radius = 0;
    std::map<IVec, int> entries;
};
HilbertTable hilbert_table(const MonoidalComplex& mc, long box_radius);

// Piecewise-linear positive grading: one integral functional per maximal
// cone, agreeing on shared faces, value >= 1 on every primitive ray.
struct AdmissibleGrading {
    std::vector<size_t> max_cones;  // fan indices, parallel to w
    IMat w;

    // Degree of x^a for a in the support; nullopt outside.
    std::optional<Int> degree_of(const MonoidalComplex& mc, const IVec& a) const;
};
std::optional<AdmissibleGrading> find_admissible_grading(const MonoidalComplex& mc);

// Witness data for embedding the canonical module as an ideal: per maximal
// cone an interior point a_j of grading-degree g_j, h = lcm(g_j), and the
// multiplication by (x^{a_j})^{h/g_j}. Injectivity is checked on the given
// support degrees of the module.
struct EmbeddingWitness {
    std::vector<IVec> interior_points;
    std::vector<Int> degrees;
    Int h = 1;
    bool injective_on_box = false;
};
EmbeddingWitness omega_embedding_witness(const MonoidalComplex& mc,
                                         const AdmissibleGrading& grading,
                                         const std::map<size_t, IVec>& interior_choices,
                                         const std::vector<IVec>& omega_support);

}  // namespace tfr
