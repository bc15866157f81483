#pragma once

#include <optional>
#include <vector>

#include "sdlab/complex_matrix.hpp"
#include "sdlab/funcspec.hpp"

namespace sdlab::linalg {

inline constexpr double kDefaultTol = 1e-12;

// Eigen- or singular-value data, values sorted descending. When vectors are
// present their columns are orthonormal and aligned with values.
struct Spectrum {
    std::vector<double> values;
    std::optional<ComplexMatrix> vectors;
};

struct QrFactors {
    ComplexMatrix q; // unitary
    ComplexMatrix r; // upper triangular, real non-negative diagonal,
                     // exactly zero below the diagonal
};

// Cyclic Jacobi with complex plane rotations. Requires hermitian defect
// <= tol * max(1, ||x||_F); eigenvalues are exact for diagonal input since
// no rotation fires.
Spectrum hermitian_eigen(const ComplexMatrix& x, double tol = kDefaultTol);

// One-sided Jacobi on columns; returns values only (no vectors). Plane
// rotations preserve |det| to rounding, which keeps products of singular
// values accurate even for badly conditioned input.
Spectrum singular_values(const ComplexMatrix& x);

// Largest singular value.
double op_norm(const ComplexMatrix& x);

// Householder QR, then a diagonal phase pass so r has a real non-negative
// diagonal. Upper-triangular input with positive diagonal reproduces exactly.
QrFactors qr(const ComplexMatrix& x);

// Upper-triangular z with positive diagonal and z^* z = x. The positivity
// gate is the pivot recurrence: each Schur-complement pivot must stay above
// tol * (largest initial diagonal).
ComplexMatrix cholesky_upper(const ComplexMatrix& x, double tol = kDefaultTol);

// f applied to x through the spectral decomposition. Eigenvalues within
// tol * max(1, ||x||_F) below zero are clamped to zero before applying f, so
// PSD matrices survive rounding; anything below that reaches f unchanged and
// may raise DomainError.
ComplexMatrix matrix_function(const ComplexMatrix& x, const funcspec::FunctionSpec& f,
                              double tol = kDefaultTol);

// log|det x| via Gaussian elimination with partial pivoting; -inf when a
// pivot vanishes. Independent of the Jacobi code paths.
double log_abs_det_lu(const ComplexMatrix& x);
double abs_det_lu(const ComplexMatrix& x);

// Dense solve a x = b by partial-pivot LU.
ComplexMatrix solve_lu(const ComplexMatrix& a, const ComplexMatrix& b);

// Triangular solves; diagonal entries must be nonzero.
ComplexMatrix solve_upper_left(const ComplexMatrix& u, const ComplexMatrix& b);    // u x = b
ComplexMatrix solve_upper_adjoint(const ComplexMatrix& u, const ComplexMatrix& b); // u^* x = b
ComplexMatrix solve_upper_right(const ComplexMatrix& a, const ComplexMatrix& u);   // x u = a

} // namespace sdlab::linalg
