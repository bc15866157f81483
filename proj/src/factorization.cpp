#include "sdlab/factorization.hpp"

#include <cmath>

#include "sdlab/algebra.hpp"
#include "sdlab/errors.hpp"

namespace sdlab::factorization {

ArvesonFactors arveson_factor(const ComplexMatrix& a, const BlockStructure& b,
                              double min_sv_ratio, double membership_tol) {
    if (a.n() != b.n()) {
        throw DimensionMismatchError("matrix and block structure sizes differ");
    }
    const auto sv = linalg::singular_values(a).values;
    if (sv.empty() || !(sv.back() > min_sv_ratio * sv.front())) {
        throw NotInvertibleError("factorization needs an invertible matrix");
    }

    ComplexMatrix a_tilde = linalg::qr(a).r;
    // Solving u * a_tilde = a instead of taking the accumulated reflectors
    // keeps the residual small independently of conditioning and preserves
    // structural zero rows of a exactly.
    ComplexMatrix u = linalg::solve_upper_right(a, a_tilde);

    double res = (u * a_tilde - a).frobenius_norm() / std::max(1.0, a.frobenius_norm());
    bool certified = algebra::in_subdiagonal(u, b, membership_tol);
    return ArvesonFactors{std::move(u), std::move(a_tilde), certified, res};
}

ComplexMatrix positive_factor(const ComplexMatrix& x, double tol) {
    return linalg::cholesky_upper(x, tol);
}

namespace {

// (factor* factor)^{-1} via two triangular solves against the identity.
ComplexMatrix inverse_from_cholesky(const ComplexMatrix& factor) {
    const ComplexMatrix eye = ComplexMatrix::identity(factor.n());
    return linalg::solve_upper_left(factor, linalg::solve_upper_adjoint(factor, eye));
}

} // namespace

NewtonSqrtResult newton_sqrt(const ComplexMatrix& x, double tol, int max_iter) {
    const double scale = x.frobenius_norm();
    if (x.hermitian_defect() > linalg::kDefaultTol * std::max(1.0, scale)) {
        throw NotPositiveDefiniteError("newton square root needs a Hermitian matrix");
    }
    if (!(scale > 0.0)) {
        throw NotPositiveDefiniteError("newton square root needs a positive definite matrix");
    }
    // Positive definiteness gate; NotPositiveDefiniteError propagates.
    linalg::cholesky_upper(x);

    // Coupled realization of x_{m+1} = (x_m + x_m^{-1} x) / 2: the companion
    // z_m tracks x^{-1} x_m, so the step reads x_{m+1} = (x_m + z_m^{-1}) / 2
    // and z_{m+1} = (z_m + x_m^{-1}) / 2. The iterate sequence is unchanged,
    // but the plain recurrence amplifies rounding errors by ~sqrt(cond)/2 per
    // step once the residual is small, while the coupled form keeps them
    // damped for ill-conditioned input.
    NewtonSqrtResult out;
    out.iterates.push_back(x);
    ComplexMatrix z = ComplexMatrix::identity(x.n());
    for (int m = 0; m < max_iter; ++m) {
        const ComplexMatrix& cur = out.iterates.back();
        const double defect = (cur * cur - x).frobenius_norm();
        if (defect <= tol * scale) {
            out.result = cur;
            out.residual = defect / scale;
            out.iterations = static_cast<int>(out.iterates.size());
            return out;
        }
        const ComplexMatrix cur_inv = inverse_from_cholesky(linalg::cholesky_upper(cur));
        const ComplexMatrix z_inv = inverse_from_cholesky(linalg::cholesky_upper(z));
        ComplexMatrix next = 0.5 * (cur + z_inv);
        next = 0.5 * (next + next.adjoint());
        next.validate("newton iterate");
        z = 0.5 * (z + cur_inv);
        z = 0.5 * (z + z.adjoint());
        out.iterates.push_back(std::move(next));
    }
    throw NoConvergenceError("newton square root did not converge in " +
                             std::to_string(max_iter) + " iterations");
}

} // namespace sdlab::factorization
