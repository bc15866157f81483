#pragma once

#include "sdlab/block_structure.hpp"
#include "sdlab/complex_matrix.hpp"

namespace sdlab::algebra {

inline constexpr double kMembershipTol = 1e-10;
inline constexpr double kMinSvRatio = 1e-8;

// Normalized trace (1/n) sum of diagonal entries.
cplx trace(const ComplexMatrix& x);

// Conditional expectation onto the block-diagonal subalgebra: keeps entries
// inside diagonal blocks, zeroes the rest exactly. Idempotent, trace
// preserving (diagonal entries are copied bitwise), unital, positive.
ComplexMatrix phi(const ComplexMatrix& x, const BlockStructure& b);

// Entry-wise membership in the block upper-triangular algebra:
// every entry strictly below the block diagonal has modulus
// <= tol * max(1, ||x||_F).
bool in_subdiagonal(const ComplexMatrix& x, const BlockStructure& b, double tol = kMembershipTol);

// Membership in the block-diagonal subalgebra.
bool in_diagonal(const ComplexMatrix& x, const BlockStructure& b, double tol = kMembershipTol);

// Inverse of the block upper-triangular projection of x, computed by block
// back-substitution so entries below the block diagonal are exactly zero.
ComplexMatrix block_upper_inverse(const ComplexMatrix& x, const BlockStructure& b);

// True iff x is block upper-triangular, invertible (s_min > ratio * s_max),
// and its inverse is block upper-triangular again. The inverse is computed
// structurally, so the third condition also verifies the diagonal blocks
// admit finite inverses.
bool in_a_cap_a_inv(const ComplexMatrix& x, const BlockStructure& b, double tol = kMembershipTol,
                    double min_sv_ratio = kMinSvRatio);

} // namespace sdlab::algebra
