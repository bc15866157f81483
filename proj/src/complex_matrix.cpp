#include "sdlab/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace sdlab {

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatchError("from_rows: matrix must be square");
        int j = 0;
        for (double v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    const int n = static_cast<int>(rows.size());
    ComplexMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw DimensionMismatchError("from_rows: matrix must be square");
        int j = 0;
        for (cplx v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    require_same_size(o);
    ComplexMatrix r(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    require_same_size(o);
    ComplexMatrix r(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require_same_size(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    require_same_size(o);
    ComplexMatrix r(n_);
    for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < n_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx(0.0, 0.0)) continue;
            const cplx* orow = &o.data_[static_cast<std::size_t>(k) * n_];
            cplx* rrow = &r.data_[static_cast<std::size_t>(i) * n_];
            for (int j = 0; j < n_; ++j) rrow[j] += a * orow[j];
        }
    }
    return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& m) {
    ComplexMatrix r(m.n_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) r.data_[k] = s * m.data_[k];
    return r;
}

ComplexMatrix operator*(double s, const ComplexMatrix& m) { return cplx(s, 0.0) * m; }

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& v : data_) sum += std::norm(v);
    return std::sqrt(sum);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::hermitian_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

bool ComplexMatrix::is_finite() const {
    for (const cplx& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void ComplexMatrix::validate(const char* context) const {
    if (!is_finite())
        throw DomainError(std::string(context) + ": matrix has non-finite entries");
}

} // namespace sdlab
