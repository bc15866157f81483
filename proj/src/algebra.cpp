#include "sdlab/algebra.hpp"

#include <cmath>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::algebra {

namespace {

void require_same_dims(const ComplexMatrix& x, const BlockStructure& b) {
    if (x.n() != b.n()) {
        throw DimensionMismatchError("matrix is " + std::to_string(x.n()) + "x" +
                                     std::to_string(x.n()) + " but block structure covers " +
                                     std::to_string(b.n()));
    }
}

} // namespace

cplx trace(const ComplexMatrix& x) {
    cplx s(0.0, 0.0);
    for (int i = 0; i < x.n(); ++i) s += x(i, i);
    return s / static_cast<double>(x.n());
}

ComplexMatrix phi(const ComplexMatrix& x, const BlockStructure& b) {
    require_same_dims(x, b);
    ComplexMatrix out = ComplexMatrix::zero(x.n());
    for (int i = 0; i < x.n(); ++i) {
        for (int j = 0; j < x.n(); ++j) {
            if (b.same_block(i, j)) out(i, j) = x(i, j);
        }
    }
    return out;
}

bool in_subdiagonal(const ComplexMatrix& x, const BlockStructure& b, double tol) {
    require_same_dims(x, b);
    const double bound = tol * std::max(1.0, x.frobenius_norm());
    for (int i = 0; i < x.n(); ++i) {
        for (int j = 0; j < x.n(); ++j) {
            if (b.upper_of_or_in_block(i, j)) continue;
            if (std::abs(x(i, j)) > bound) return false;
        }
    }
    return true;
}

bool in_diagonal(const ComplexMatrix& x, const BlockStructure& b, double tol) {
    require_same_dims(x, b);
    const double bound = tol * std::max(1.0, x.frobenius_norm());
    for (int i = 0; i < x.n(); ++i) {
        for (int j = 0; j < x.n(); ++j) {
            if (b.same_block(i, j)) continue;
            if (std::abs(x(i, j)) > bound) return false;
        }
    }
    return true;
}

ComplexMatrix block_upper_inverse(const ComplexMatrix& x, const BlockStructure& b) {
    require_same_dims(x, b);
    const int n = x.n();
    const int nb = b.block_count();

    // Upper projection: entries below the block diagonal are dropped so the
    // result is exactly block upper-triangular whatever noise x carries there.
    ComplexMatrix a = ComplexMatrix::zero(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (b.upper_of_or_in_block(i, j)) a(i, j) = x(i, j);
        }
    }

    // Invert each diagonal block with a dense solve.
    std::vector<ComplexMatrix> inv_diag;
    inv_diag.reserve(nb);
    for (int blk = 0; blk < nb; ++blk) {
        const int lo = b.boundary(blk);
        const int sz = b.sizes()[blk];
        ComplexMatrix d = ComplexMatrix::zero(sz);
        for (int i = 0; i < sz; ++i) {
            for (int j = 0; j < sz; ++j) d(i, j) = a(lo + i, lo + j);
        }
        inv_diag.push_back(linalg::solve_lu(d, ComplexMatrix::identity(sz)));
    }

    // Block back-substitution: X_JJ = D_J^{-1} and, for I < J,
    // X_IJ = -D_I^{-1} * sum_{I<K<=J} A_IK X_KJ. Everything below the block
    // diagonal stays exactly zero.
    ComplexMatrix out = ComplexMatrix::zero(n);
    for (int bj = 0; bj < nb; ++bj) {
        const int jlo = b.boundary(bj);
        const int jsz = b.sizes()[bj];
        const ComplexMatrix& dj = inv_diag[bj];
        for (int i = 0; i < jsz; ++i) {
            for (int j = 0; j < jsz; ++j) out(jlo + i, jlo + j) = dj(i, j);
        }
        for (int bi = bj - 1; bi >= 0; --bi) {
            const int ilo = b.boundary(bi);
            const int isz = b.sizes()[bi];
            // acc = sum over K in (I, J] of A_IK X_KJ, an isz x jsz slab.
            std::vector<cplx> acc(static_cast<std::size_t>(isz) * jsz, cplx(0.0, 0.0));
            const int klo = b.boundary(bi + 1);
            const int khi = jlo + jsz;
            for (int i = 0; i < isz; ++i) {
                for (int k = klo; k < khi; ++k) {
                    const cplx aik = a(ilo + i, k);
                    if (aik == cplx(0.0, 0.0)) continue;
                    for (int j = 0; j < jsz; ++j) {
                        acc[static_cast<std::size_t>(i) * jsz + j] += aik * out(k, jlo + j);
                    }
                }
            }
            const ComplexMatrix& di = inv_diag[bi];
            for (int i = 0; i < isz; ++i) {
                for (int j = 0; j < jsz; ++j) {
                    cplx v(0.0, 0.0);
                    for (int k = 0; k < isz; ++k) {
                        v += di(i, k) * acc[static_cast<std::size_t>(k) * jsz + j];
                    }
                    out(ilo + i, jlo + j) = -v;
                }
            }
        }
    }
    return out;
}

bool in_a_cap_a_inv(const ComplexMatrix& x, const BlockStructure& b, double tol,
                    double min_sv_ratio) {
    if (!in_subdiagonal(x, b, tol)) return false;
    const auto sv = linalg::singular_values(x).values;
    if (sv.empty() || !(sv.back() > min_sv_ratio * sv.front())) return false;
    ComplexMatrix inv = ComplexMatrix::zero(x.n());
    try {
        inv = block_upper_inverse(x, b);
    } catch (const NotInvertibleError&) {
        return false;
    }
    if (!inv.is_finite()) return false;
    return in_subdiagonal(inv, b, tol);
}

} // namespace sdlab::algebra
