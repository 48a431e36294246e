/* Exact dense linear algebra over Z and Q: fraction-free (Bareiss)
 * determinants and ranks, Gauss-Jordan reduction, kernels and inverses. */
#pragma once

#include <optional>
#include <vector>

#include "dynshaf/numbers.hpp"

namespace dynshaf {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Determinant of a square integer matrix, fraction-free elimination.
Int det_int(IntMat a);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(RatMat& a);

/// Basis of the right kernel {v : a v = 0}. Each basis vector is scaled to a
/// primitive integer vector with positive first nonzero entry.
std::vector<RatVec> kernel_basis(const RatMat& a);

/// Solves a x = b exactly; empty when the system is inconsistent.
/// Requires a square regular matrix for the unique-solution overload below.
std::optional<RatVec> solve_square(const RatMat& a, const RatVec& b);

RatMat mat_inverse(const RatMat& a);  // throws on singular input
IntMat int_mat_mul(const IntMat& a, const IntMat& b);
IntVec int_mat_vec(const IntMat& a, const IntVec& v);

RatMat to_rat(const IntMat& a);

/// Scales a rational vector to primitive integers, positive first nonzero
/// entry. Zero vectors stay zero.
IntVec primitive_integer_vector(const RatVec& v);
void canonicalize_sign(IntVec& v);

}  // namespace dynshaf
