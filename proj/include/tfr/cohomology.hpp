#pragma once

#include "tfr/cellcomplex.hpp"

#include <optional>
#include <string>

namespace tfr {

// Dimensions of the graded pieces H^i_m(K[Σ])_a for i = 0..dim Σ.
struct GradedPiece {
    IVec degree;
    std::vector<size_t> dims;

    bool all_zero() const {
        for (size_t d : dims)
            if (d) return false;
        return true;
    }
};

// H^i_m(K[Σ])_a as the reduced cohomology of the cells containing -a,
// one index down. Degrees with -a outside the support give all zeros.
GradedPiece local_cohomology_at(const Fan& f, const IncidenceFunction& eps,
                                const IVec& a, const FieldSpec& field);

// Independent route: the degree-a slice of the dualized cone complex,
// with one component per cone C with a ∈ -C (the zero cone counts only
// at a = 0) and the incidence signs as differentials.
GradedPiece direct_Dcomplex_piece(const Fan& f, const IncidenceFunction& eps,
                                  const IVec& a, const FieldSpec& field);

// Per-cone reduced cohomology of the order complex of the punctured star,
// shifted so column i reports the contribution to H^i_m.
struct CohomologyTable {
    size_t fan_dim = 0;
    std::vector<std::vector<size_t>> entries;  // [cone][i], i = 0..fan_dim
    size_t depth = 0;                          // fan_dim + 1 when all entries vanish
    bool cm = false;
};
CohomologyTable hochster_table(const Fan& f, const FieldSpec& field);

size_t depth(const Fan& f, const FieldSpec& field);

// depth = dim; also enforces purity, which Cohen-Macaulayness implies.
bool is_cohen_macaulay(const Fan& f, const FieldSpec& field);

// dim ω_a = dim ker((D_k)_a → (D_{k-1})_a) of the exact dual resolution;
// meaningful for Cohen-Macaulay fans only. Throws NotCohenMacaulay.
size_t canonical_module_dim_at(const Fan& f, const IncidenceFunction& eps,
                               const CohomologyTable& table, const IVec& a,
                               const FieldSpec& field);

// Alternating-sum identity of the long exact sequence for Σ = Σ1 ∪ Σ2,
// checked at every degree of the box.
struct MayerVietorisReport {
    bool ok = true;
    std::string message;
    std::optional<IVec> first_failure;
};
MayerVietorisReport mayer_vietoris_check(const Fan& f, const Fan& f1, const Fan& f2,
                                         long box_radius, const FieldSpec& field);

}  // namespace tfr
