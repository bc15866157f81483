#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "sdlab/errors.hpp"

namespace sdlab {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major storage.
// Entries are required to stay finite; validate() enforces this where
// data enters from outside (IO, generators).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n) {
        if (n <= 0) throw DimensionMismatchError("matrix dimension must be positive");
    }

    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(const std::vector<cplx>& d) {
        ComplexMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }

    // Row-major literal, real entries: ComplexMatrix::from_rows({{1, 1}, {0, 1}}).
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    int n() const { return n_; }

    cplx& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<cplx>& data() const { return data_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);

    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& m);
    friend ComplexMatrix operator*(double s, const ComplexMatrix& m);

    double frobenius_norm() const;
    double max_abs() const;

    // Largest |x(i,j) - conj(x(j,i))|; zero for exactly Hermitian matrices.
    double hermitian_defect() const;

    bool is_finite() const;

    // Throws DomainError when any entry is NaN or infinite.
    void validate(const char* context) const;

  private:
    int n_ = 0;
    std::vector<cplx> data_;

    void require_same_size(const ComplexMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatchError("matrix dimensions differ");
    }
};

} // namespace sdlab
