#pragma once

#include "tfr/linalg.hpp"

#include <optional>

namespace tfr {

// Exact rational feasibility problem:  eq·x = eq_rhs,  ge·x >= ge_rhs.
struct LinearProgram {
    size_t nvars = 0;
    QMat eq;
    QVec eq_rhs;
    QMat ge;
    QVec ge_rhs;

    void add_eq(QVec row, Rat rhs);
    void add_ge(QVec row, Rat rhs);
};

// Deterministic Fourier–Motzkin elimination. Returns a feasible point or
// nullopt. Ties are broken by fixed variable order and midpoint choice.
std::optional<QVec> feasible_point(const LinearProgram& lp);

// A rational functional w with w·g >= 1 for every g in `gens`
// (exists iff the cone generated by `gens` is pointed, for nonzero gens).
std::optional<QVec> strictly_positive_functional(const IMat& gens, size_t dim);

}  // namespace tfr
