#pragma once

#include <vector>

#include "sdlab/complex_matrix.hpp"
#include "sdlab/funcspec.hpp"

namespace sdlab::spectral {

// Right-continuous step function on [0, 1) with n equal cells: the value on
// [(j-1)/n, j/n) is values[j-1]. Values must be finite and non-increasing;
// generalized s-number profiles additionally have values >= 0, but signed
// profiles (log scale) are allowed.
class StepFunction {
public:
    StepFunction(int n, std::vector<double> values);

    int n() const { return n_; }
    const std::vector<double>& values() const { return values_; }

    // Value at t in [0, 1); at(1.0) returns the last cell's value.
    double at(double t) const;

    // Exact integral over the first j cells, j in [0, n].
    double prefix(int j) const;

    // Integral over [0, t] for t in [0, 1], piecewise linear in t.
    double integral_to(double t) const;

private:
    int n_;
    std::vector<double> values_;
};

// Singular-value step function of x: cell j carries the j-th largest
// singular value.
StepFunction mu(const ComplexMatrix& x);

// Integral of mu(x) over [0, t].
double sigma(const ComplexMatrix& x, double t);

// Integral of log mu(x) over [0, t]. Requires x invertible
// (s_min > min_sv_ratio * s_max), otherwise NotInvertibleError.
double log_sigma(const ComplexMatrix& x, double t, double min_sv_ratio = 1e-8);

// (1/n) sum_j f(s_j(x)): the normalized trace of f(|x|).
double trace_f(const ComplexMatrix& x, const funcspec::FunctionSpec& f);

// Fuglede-Kadison determinant |det x|^(1/n), computed from singular values in
// log space; returns 0 when x is singular.
double fk_det(const ComplexMatrix& x);

} // namespace sdlab::spectral
