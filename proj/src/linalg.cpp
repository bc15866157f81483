#include "sdlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace sdlab::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 60;

double sgn(double x) { return x >= 0.0 ? 1.0 : -1.0; }

// Plane rotation diagonalizing the hermitian 2x2 [[app, apq], [conj(apq), aqq]]:
// u carries the phase of conj(apq), c/s the real Jacobi cosine/sine, t the
// tangent for the exact diagonal update.
struct Rotation {
    double c, s, t;
    cplx u;
};

Rotation make_rotation(double app, double aqq, cplx apq) {
    const double mag = std::abs(apq);
    Rotation rot;
    rot.u = std::conj(apq) / mag;
    const double tau = (aqq - app) / (2.0 * mag);
    rot.t = sgn(tau) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
    rot.c = 1.0 / std::sqrt(1.0 + rot.t * rot.t);
    rot.s = rot.t * rot.c;
    return rot;
}

void sort_descending(std::vector<double>& values, ComplexMatrix* vectors) {
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] > values[b]; });
    std::vector<double> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = values[order[i]];
    if (vectors) {
        ComplexMatrix perm(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) perm(i, j) = (*vectors)(i, order[j]);
        *vectors = perm;
    }
    values = std::move(sorted);
}

} // namespace

Spectrum hermitian_eigen(const ComplexMatrix& x, double tol) {
    const int n = x.n();
    const double scale = std::max(1.0, x.frobenius_norm());
    if (x.hermitian_defect() > tol * scale)
        throw NotHermitianError("hermitian_eigen: input is not hermitian within tolerance");

    // exact symmetrization so the rotations act on a truly hermitian matrix
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i) {
        a(i, i) = cplx(x(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (x(i, j) + std::conj(x(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                if (std::abs(apq) <= 0.5 * kEps * (std::fabs(app) + std::fabs(aqq))) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const Rotation rot = make_rotation(app, aqq, apq);
                const cplx us = rot.u * rot.s;
                const cplx uc = rot.u * rot.c;
                for (int k = 0; k < n; ++k) { // columns: A <- A R
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = rot.c * akp - us * akq;
                    a(k, q) = rot.s * akp + uc * akq;
                }
                const cplx ubar_s = std::conj(us);
                const cplx ubar_c = std::conj(rot.u) * rot.c;
                for (int k = 0; k < n; ++k) { // rows: A <- R^* A
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = rot.c * apk - ubar_s * aqk;
                    a(q, k) = rot.s * apk + ubar_c * aqk;
                }
                const double shift = rot.t * std::abs(apq);
                a(p, p) = cplx(app - shift, 0.0);
                a(q, q) = cplx(aqq + shift, 0.0);
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) { // V <- V R
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = rot.c * vkp - us * vkq;
                    v(k, q) = rot.s * vkp + uc * vkq;
                }
                rotated = true;
            }
        }
        if (!rotated) converged = true;
    }
    if (!converged) throw NoConvergenceError("hermitian_eigen: Jacobi sweeps did not converge");

    Spectrum spec;
    spec.values.resize(n);
    for (int i = 0; i < n; ++i) spec.values[i] = a(i, i).real();
    sort_descending(spec.values, &v);
    spec.vectors = std::move(v);
    return spec;
}

Spectrum singular_values(const ComplexMatrix& x) {
    const int n = x.n();
    ComplexMatrix a = x;
    std::vector<double> colsq(n, 0.0);
    auto recompute = [&](int j) {
        double sum = 0.0;
        for (int k = 0; k < n; ++k) sum += std::norm(a(k, j));
        colsq[j] = sum;
    };
    for (int j = 0; j < n; ++j) recompute(j);

    bool converged = (n == 1);
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double app = colsq[p];
                const double aqq = colsq[q];
                if (app == 0.0 || aqq == 0.0) continue;
                cplx apq(0.0, 0.0);
                for (int k = 0; k < n; ++k) apq += std::conj(a(k, p)) * a(k, q);
                if (std::abs(apq) <= 4.0 * kEps * std::sqrt(app * aqq)) continue;
                const Rotation rot = make_rotation(app, aqq, apq);
                const cplx us = rot.u * rot.s;
                const cplx uc = rot.u * rot.c;
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = rot.c * akp - us * akq;
                    a(k, q) = rot.s * akp + uc * akq;
                }
                recompute(p);
                recompute(q);
                rotated = true;
            }
        }
        if (!rotated) converged = true;
    }

    Spectrum spec;
    spec.values.resize(n);
    for (int j = 0; j < n; ++j) spec.values[j] = std::sqrt(colsq[j]);
    sort_descending(spec.values, nullptr);
    return spec;
}

double op_norm(const ComplexMatrix& x) { return singular_values(x).values.front(); }

QrFactors qr(const ComplexMatrix& x) {
    const int n = x.n();
    ComplexMatrix r = x;
    ComplexMatrix q = ComplexMatrix::identity(n);

    std::vector<cplx> w(n);
    for (int k = 0; k < n; ++k) {
        double tail = 0.0;
        for (int i = k + 1; i < n; ++i) tail += std::norm(r(i, k));
        if (tail == 0.0) continue; // column already triangular; the phase pass fixes the diagonal
        const cplx rkk = r(k, k);
        const double colnorm = std::sqrt(tail + std::norm(rkk));
        const double rkkabs = std::abs(rkk);
        const cplx phase = rkkabs == 0.0 ? cplx(1.0, 0.0) : rkk / rkkabs;
        const cplx alpha = -phase * colnorm;
        double wnormsq = 0.0;
        for (int i = k; i < n; ++i) {
            w[i] = r(i, k) - (i == k ? alpha : cplx(0.0, 0.0));
            wnormsq += std::norm(w[i]);
        }
        if (wnormsq == 0.0) continue;
        const double beta = 2.0 / wnormsq;
        for (int j = k; j < n; ++j) { // r <- (I - beta w w^*) r
            cplx dot(0.0, 0.0);
            for (int i = k; i < n; ++i) dot += std::conj(w[i]) * r(i, j);
            dot *= beta;
            for (int i = k; i < n; ++i) r(i, j) -= dot * w[i];
        }
        for (int i = 0; i < n; ++i) { // q <- q (I - beta w w^*)
            cplx dot(0.0, 0.0);
            for (int j = k; j < n; ++j) dot += q(i, j) * w[j];
            dot *= beta;
            for (int j = k; j < n; ++j) q(i, j) -= dot * std::conj(w[j]);
        }
        r(k, k) = alpha;
        for (int i = k + 1; i < n; ++i) r(i, k) = 0.0;
    }

    // make the diagonal of r real and non-negative
    for (int k = 0; k < n; ++k) {
        const cplx d = r(k, k);
        const double mag = std::abs(d);
        if (mag == 0.0) {
            r(k, k) = 0.0;
            continue;
        }
        const cplx phase = d / mag;
        const cplx pc = std::conj(phase);
        r(k, k) = mag;
        for (int j = k + 1; j < n; ++j) r(k, j) *= pc;
        for (int i = 0; i < n; ++i) q(i, k) *= phase;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) r(i, j) = 0.0;

    return QrFactors{std::move(q), std::move(r)};
}

ComplexMatrix cholesky_upper(const ComplexMatrix& x, double tol) {
    const int n = x.n();
    const double scale = std::max(1.0, x.frobenius_norm());
    if (x.hermitian_defect() > std::max(tol, kDefaultTol) * scale)
        throw NotPositiveDefiniteError("cholesky_upper: input is not hermitian");

    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(x(i, i).real()));

    ComplexMatrix z(n);
    for (int k = 0; k < n; ++k) {
        double pivot = x(k, k).real();
        for (int i = 0; i < k; ++i) pivot -= std::norm(z(i, k));
        if (!(pivot > tol * max_diag) || !std::isfinite(pivot))
            throw NotPositiveDefiniteError("cholesky_upper: pivot " + std::to_string(k) +
                                           " is not positive");
        const double d = std::sqrt(pivot);
        z(k, k) = d;
        for (int j = k + 1; j < n; ++j) {
            cplx sum = x(k, j);
            for (int i = 0; i < k; ++i) sum -= std::conj(z(i, k)) * z(i, j);
            z(k, j) = sum / d;
        }
    }
    return z;
}

ComplexMatrix matrix_function(const ComplexMatrix& x, const funcspec::FunctionSpec& f, double tol) {
    const Spectrum spec = hermitian_eigen(x, tol);
    const ComplexMatrix& v = *spec.vectors;
    const int n = x.n();
    const double clamp = tol * std::max(1.0, x.frobenius_norm());
    std::vector<double> fvals(n);
    for (int i = 0; i < n; ++i) {
        double lambda = spec.values[i];
        if (lambda < 0.0 && lambda >= -clamp) lambda = 0.0;
        fvals[i] = f.eval(lambda);
    }
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            cplx sum(0.0, 0.0);
            for (int k = 0; k < n; ++k) sum += fvals[k] * v(i, k) * std::conj(v(j, k));
            out(i, j) = sum;
            out(j, i) = std::conj(sum);
        }
        out(i, i) = cplx(out(i, i).real(), 0.0);
    }
    return out;
}

namespace {

double log_abs_det_inplace(ComplexMatrix& a) {
    const int n = a.n();
    double log_det = 0.0;
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(a(i, k));
            if (cand > best) {
                best = cand;
                pivot_row = i;
            }
        }
        if (best == 0.0) return -std::numeric_limits<double>::infinity();
        if (pivot_row != k)
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(pivot_row, j));
        log_det += std::log(best);
        const cplx pivot = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx factor = a(i, k) / pivot;
            if (factor == cplx(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
            a(i, k) = 0.0;
        }
    }
    return log_det;
}

} // namespace

double log_abs_det_lu(const ComplexMatrix& x) {
    ComplexMatrix a = x;
    return log_abs_det_inplace(a);
}

double abs_det_lu(const ComplexMatrix& x) { return std::exp(log_abs_det_lu(x)); }

ComplexMatrix solve_lu(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int n = a.n();
    if (b.n() != n) throw DimensionMismatchError("solve_lu: dimension mismatch");
    ComplexMatrix lu = a;
    ComplexMatrix rhs = b;
    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double best = std::abs(lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(lu(i, k));
            if (cand > best) {
                best = cand;
                pivot_row = i;
            }
        }
        if (best == 0.0) throw NotInvertibleError("solve_lu: matrix is singular");
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot_row, j));
            for (int j = 0; j < n; ++j) std::swap(rhs(k, j), rhs(pivot_row, j));
        }
        const cplx pivot = lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx factor = lu(i, k) / pivot;
            if (factor == cplx(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
            for (int j = 0; j < n; ++j) rhs(i, j) -= factor * rhs(k, j);
            lu(i, k) = 0.0;
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        for (int j = 0; j < n; ++j) {
            cplx sum = rhs(k, j);
            for (int i = k + 1; i < n; ++i) sum -= lu(k, i) * rhs(i, j);
            rhs(k, j) = sum / lu(k, k);
        }
    }
    return rhs;
}

ComplexMatrix solve_upper_left(const ComplexMatrix& u, const ComplexMatrix& b) {
    const int n = u.n();
    if (b.n() != n) throw DimensionMismatchError("solve_upper_left: dimension mismatch");
    ComplexMatrix x = b;
    for (int k = n - 1; k >= 0; --k) {
        const cplx d = u(k, k);
        if (d == cplx(0.0, 0.0)) throw NotInvertibleError("solve_upper_left: zero diagonal");
        for (int j = 0; j < n; ++j) {
            cplx sum = x(k, j);
            for (int i = k + 1; i < n; ++i) sum -= u(k, i) * x(i, j);
            x(k, j) = sum / d;
        }
    }
    return x;
}

ComplexMatrix solve_upper_adjoint(const ComplexMatrix& u, const ComplexMatrix& b) {
    const int n = u.n();
    if (b.n() != n) throw DimensionMismatchError("solve_upper_adjoint: dimension mismatch");
    ComplexMatrix x = b;
    for (int k = 0; k < n; ++k) {
        const cplx d = std::conj(u(k, k));
        if (d == cplx(0.0, 0.0)) throw NotInvertibleError("solve_upper_adjoint: zero diagonal");
        for (int j = 0; j < n; ++j) {
            cplx sum = x(k, j);
            for (int i = 0; i < k; ++i) sum -= std::conj(u(i, k)) * x(i, j);
            x(k, j) = sum / d;
        }
    }
    return x;
}

ComplexMatrix solve_upper_right(const ComplexMatrix& a, const ComplexMatrix& u) {
    const int n = u.n();
    if (a.n() != n) throw DimensionMismatchError("solve_upper_right: dimension mismatch");
    ComplexMatrix x(n);
    for (int j = 0; j < n; ++j) {
        const cplx d = u(j, j);
        if (d == cplx(0.0, 0.0)) throw NotInvertibleError("solve_upper_right: zero diagonal");
        for (int i = 0; i < n; ++i) {
            cplx sum = a(i, j);
            for (int k = 0; k < j; ++k) sum -= x(i, k) * u(k, j);
            x(i, j) = sum / d;
        }
    }
    return x;
}

} // namespace sdlab::linalg
