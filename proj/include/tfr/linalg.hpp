#pragma once

#include "tfr/field.hpp"
#include "tfr/numbers.hpp"

#include <optional>
#include <vector>

namespace tfr {

// Row-major matrices.
using IMat = std::vector<IVec>;
using QMat = std::vector<QVec>;

inline size_t ncols(const IMat& m) { return m.empty() ? 0 : m[0].size(); }
inline size_t ncols(const QMat& m) { return m.empty() ? 0 : m[0].size(); }

QMat to_rational(const IMat& m);

size_t rank(const QMat& m);
size_t rank(const IMat& m);

// Rank over the given field (rationals, or F_p after reduction mod p).
size_t rank(const IMat& m, const FieldSpec& field);

// Basis of { x : m x = 0 } over Q, one kernel vector per row of the result.
QMat kernel(const QMat& m);
IMat kernel_primitive(const IMat& m);

// One solution of m x = rhs over Q, or nullopt if inconsistent.
std::optional<QVec> solve(const QMat& m, const QVec& rhs);

// Determinant of a square rational matrix.
Rat det(const QMat& m);

// Diagonalization over Z: u * a * v = d with u, v unimodular and d
// diagonal (no divisibility chain). u_inv is the inverse of u.
struct SmithForm {
    IMat d;
    IMat u, u_inv;
    IMat v;
    size_t rank = 0;
};
SmithForm smith_normal_form(const IMat& a);

// Basis of the saturation (span of the columns of `gens`) ∩ Z^d, as rows.
// `gens` holds generators as rows of length d.
IMat saturated_lattice_basis(const IMat& gens);

// Integral projection matrix Z^d -> Z^(d-r) whose kernel is exactly the
// saturated lattice of `gens` (r = rank of gens). Rows are the functionals.
IMat lattice_projection(const IMat& gens, size_t ambient_dim);

}  // namespace tfr
