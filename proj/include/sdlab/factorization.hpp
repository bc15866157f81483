#pragma once

#include <vector>

#include "sdlab/block_structure.hpp"
#include "sdlab/complex_matrix.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::factorization {

struct ArvesonFactors {
    ComplexMatrix u;       // unitary factor
    ComplexMatrix a_tilde; // upper triangular, real positive diagonal
    bool certified;        // u lies in the block upper-triangular algebra
    double residual;       // ||u * a_tilde - a||_F / max(1, ||a||_F)
};

// Factor an invertible a as u * a_tilde with u unitary and a_tilde upper
// triangular with strictly positive diagonal. u is recovered by solving
// u * a_tilde = a against the triangular factor, which keeps the rows of u
// that are structurally zero in a exactly zero; `certified` records whether
// u passed block-membership screening for the given structure. Throws
// NotInvertibleError when s_min <= min_sv_ratio * s_max.
ArvesonFactors arveson_factor(const ComplexMatrix& a, const BlockStructure& b,
                              double min_sv_ratio = 1e-8, double membership_tol = 1e-10);

// Upper-triangular z with z* z = x for Hermitian positive definite x.
ComplexMatrix positive_factor(const ComplexMatrix& x, double tol = linalg::kDefaultTol);

struct NewtonSqrtResult {
    ComplexMatrix result;
    std::vector<ComplexMatrix> iterates; // x_1 = x, x_2, ..., last == result
    double residual;                     // ||result^2 - x||_F / ||x||_F
    int iterations;                      // number of iterates produced
};

// Newton iteration x_{m+1} = (x_m + x_m^{-1} x) / 2 for the positive square
// root of Hermitian positive definite x, stopping once
// ||x_m^2 - x||_F <= tol * ||x||_F. Internally the step is run in coupled
// form (a companion sequence carries x^{-1} x_m), which leaves the iterates
// unchanged in exact arithmetic but stays numerically stable for
// ill-conditioned input; inverses go through Cholesky factors and each
// iterate is re-symmetrized. Throws NotPositiveDefiniteError for bad input
// and NoConvergenceError past max_iter steps.
NewtonSqrtResult newton_sqrt(const ComplexMatrix& x, double tol = 1e-11, int max_iter = 100);

} // namespace sdlab::factorization
