#pragma once

// Shared fixtures and independent reference implementations used to
// cross-check the production kernels.  Everything here is deliberately
// naive: correctness over speed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sdlab/complex_matrix.hpp"
#include "sdlab/harness.hpp"
#include "sdlab/linalg.hpp"

namespace testutil {

using sdlab::cplx;
using sdlab::ComplexMatrix;

// |det| via Gauss elimination with full pivoting on a plain copy of the
// entries.  Independent of the partial-pivot LU used by the library.
inline double naive_abs_det(const ComplexMatrix& x) {
  const int n = x.n();
  std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = x(i, j);
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pi = k, pj = k;
    double best = 0.0;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0.0) return 0.0;
    std::swap(a[k], a[pi]);
    if (pj != k)
      for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][pj]);
    det *= std::abs(a[k][k]);
    for (int i = k + 1; i < n; ++i) {
      const cplx f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Scalar Newton iteration for sqrt, used as an oracle for the matrix
// version on diagonal inputs.
inline double scalar_newton_sqrt(double t, int steps) {
  double x = t;
  for (int m = 0; m < steps; ++m) x = 0.5 * (x + t / x);
  return x;
}

inline ComplexMatrix random_ginibre(int n, unsigned long long seed) {
  return sdlab::harness::generate(sdlab::harness::Ensemble::Ginibre, n,
                                  sdlab::BlockStructure::all_ones(n), seed);
}

inline ComplexMatrix random_psd(int n, unsigned long long seed) {
  return sdlab::harness::generate(sdlab::harness::Ensemble::Psd, n,
                                  sdlab::BlockStructure::all_ones(n), seed);
}

inline ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).max_abs();
}

// Hermitian matrix with prescribed eigenvalues: q diag(vals) q*.
inline ComplexMatrix hermitian_with_eigenvalues(
    const std::vector<double>& vals, unsigned long long seed) {
  const int n = static_cast<int>(vals.size());
  const ComplexMatrix g = random_ginibre(n, seed);
  const sdlab::linalg::QrFactors f = sdlab::linalg::qr(g);
  ComplexMatrix d(n);
  for (int i = 0; i < n; ++i) d(i, i) = vals[i];
  return f.q * d * f.q.adjoint();
}

}  // namespace testutil
