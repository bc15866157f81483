#include "sdlab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "sdlab/errors.hpp"
#include "sdlab/linalg.hpp"

namespace sdlab::spectral {

StepFunction::StepFunction(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n_ <= 0) throw DomainError("step function needs at least one cell");
    if (static_cast<int>(values_.size()) != n_) {
        throw DimensionMismatchError("step function has " + std::to_string(values_.size()) +
                                     " values for " + std::to_string(n_) + " cells");
    }
    for (int j = 0; j < n_; ++j) {
        if (!std::isfinite(values_[j])) throw DomainError("step function value is not finite");
        if (j > 0 && values_[j] > values_[j - 1]) {
            throw DomainError("step function values must be non-increasing");
        }
    }
}

double StepFunction::at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("step function argument outside [0, 1]");
    int j = static_cast<int>(t * n_);
    if (j >= n_) j = n_ - 1;
    return values_[j];
}

double StepFunction::prefix(int j) const {
    if (j < 0 || j > n_) throw DomainError("prefix index outside [0, n]");
    double s = 0.0;
    for (int i = 0; i < j; ++i) s += values_[i];
    return s / n_;
}

double StepFunction::integral_to(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("integration endpoint outside [0, 1]");
    int j = static_cast<int>(t * n_);
    if (j > n_) j = n_;
    double frac = t - static_cast<double>(j) / n_;
    if (frac < 0.0) frac = 0.0;
    double s = prefix(j);
    if (j < n_) s += frac * values_[j];
    return s;
}

StepFunction mu(const ComplexMatrix& x) {
    return StepFunction(x.n(), linalg::singular_values(x).values);
}

double sigma(const ComplexMatrix& x, double t) {
    return mu(x).integral_to(t);
}

double log_sigma(const ComplexMatrix& x, double t, double min_sv_ratio) {
    const auto sv = linalg::singular_values(x).values;
    if (sv.empty() || !(sv.back() > min_sv_ratio * sv.front())) {
        throw NotInvertibleError("log-scale integral needs an invertible matrix");
    }
    std::vector<double> logs(sv.size());
    std::transform(sv.begin(), sv.end(), logs.begin(), [](double s) { return std::log(s); });
    return StepFunction(x.n(), std::move(logs)).integral_to(t);
}

double trace_f(const ComplexMatrix& x, const funcspec::FunctionSpec& f) {
    const auto sv = linalg::singular_values(x).values;
    double s = 0.0;
    for (double v : sv) s += f.eval(v);
    return s / x.n();
}

double fk_det(const ComplexMatrix& x) {
    const auto sv = linalg::singular_values(x).values;
    double log_sum = 0.0;
    for (double v : sv) {
        if (v <= 0.0) return 0.0;
        log_sum += std::log(v);
    }
    return std::exp(log_sum / x.n());
}

} // namespace sdlab::spectral
