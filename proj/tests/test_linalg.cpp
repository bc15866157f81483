#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "helpers.hpp"
#include "sdlab/errors.hpp"
#include "sdlab/funcspec.hpp"
#include "sdlab/linalg.hpp"

using sdlab::ComplexMatrix;
using sdlab::cplx;
namespace lin = sdlab::linalg;
namespace fs = sdlab::funcspec;

TEST_SUITE("linalg") {

TEST_CASE("hermitian_eigen is exact on diagonal input") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(3.0), cplx(-1.0), cplx(7.0)});
    const lin::Spectrum s = lin::hermitian_eigen(d);
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[0] == 7.0);
    CHECK(s.values[1] == 3.0);
    CHECK(s.values[2] == -1.0);
}

TEST_CASE("hermitian_eigen matches closed forms") {
    const ComplexMatrix a = testutil::mat2(2.0, 1.0, 1.0, 2.0);
    const lin::Spectrum sa = lin::hermitian_eigen(a);
    CHECK(sa.values[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(sa.values[1] == doctest::Approx(1.0).epsilon(1e-13));

    const ComplexMatrix b = testutil::mat2(2.0, cplx(0.0, 1.0), cplx(0.0, -1.0), 2.0);
    const lin::Spectrum sb = lin::hermitian_eigen(b);
    CHECK(sb.values[0] == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(sb.values[1] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermitian_eigen reconstructs the input from its spectral data") {
    for (int n : {2, 5, 8}) {
        const ComplexMatrix g = testutil::random_ginibre(n, 100 + static_cast<unsigned>(n));
        const ComplexMatrix x = 0.5 * (g + g.adjoint());
        const lin::Spectrum s = lin::hermitian_eigen(x);
        REQUIRE(s.vectors.has_value());
        const ComplexMatrix& v = *s.vectors;

        const double unit_defect = (v.adjoint() * v - ComplexMatrix::identity(n)).max_abs();
        CHECK(unit_defect < 1e-12);

        const ComplexMatrix rebuilt =
            v * ComplexMatrix::diagonal(std::vector<cplx>(s.values.begin(), s.values.end())) *
            v.adjoint();
        CHECK(testutil::max_abs_diff(rebuilt, x) < 1e-12 * std::max(1.0, x.frobenius_norm()));

        for (std::size_t j = 1; j < s.values.size(); ++j) CHECK(s.values[j - 1] >= s.values[j]);
    }
}

TEST_CASE("hermitian_eigen rejects non-hermitian input") {
    const ComplexMatrix x = testutil::mat2(0.0, 1.0, 0.0, 0.0);
    CHECK_THROWS_AS(lin::hermitian_eigen(x), sdlab::NotHermitianError);
}

TEST_CASE("singular values of the shear matrix hit the golden ratio") {
    const ComplexMatrix a = testutil::mat2(1.0, 1.0, 0.0, 1.0);
    const lin::Spectrum s = lin::singular_values(a);
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    REQUIRE(s.values.size() == 2);
    CHECK(std::abs(s.values[0] - golden) < 1e-12);
    CHECK(std::abs(s.values[1] - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-12);
    // the two values are reciprocal: det has modulus 1
    CHECK(std::abs(s.values[0] * s.values[1] - 1.0) < 1e-13);
}

TEST_CASE("singular values agree with eigenvalues of x* x") {
    for (int n : {3, 6}) {
        const ComplexMatrix x = testutil::random_ginibre(n, 200 + static_cast<unsigned>(n));
        const std::vector<double> sv = lin::singular_values(x).values;
        const std::vector<double> ev = lin::hermitian_eigen(x.adjoint() * x).values;
        REQUIRE(sv.size() == ev.size());
        for (std::size_t j = 0; j < sv.size(); ++j)
            CHECK(sv[j] == doctest::Approx(std::sqrt(std::max(0.0, ev[j]))).epsilon(1e-10));
    }
}

TEST_CASE("singular-value products track |det| even for graded spectra") {
    // x = q1 diag(1, 1e-4, 1e-8) q2 with unitary q1, q2: |det x| = 1e-12.
    const ComplexMatrix q1 = lin::qr(testutil::random_ginibre(3, 301)).q;
    const ComplexMatrix q2 = lin::qr(testutil::random_ginibre(3, 302)).q;
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(1.0), cplx(1e-4), cplx(1e-8)});
    const ComplexMatrix x = q1 * d * q2;
    const std::vector<double> s = lin::singular_values(x).values;
    double logdet = 0.0;
    for (double v : s) logdet += std::log(v);
    CHECK(logdet == doctest::Approx(std::log(1e-12)).epsilon(1e-10));
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(s[2] == doctest::Approx(1e-8).epsilon(1e-6));
}

TEST_CASE("op_norm of a unitary is one") {
    const ComplexMatrix q = lin::qr(testutil::random_ginibre(5, 303)).q;
    CHECK(lin::op_norm(q) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("qr produces a unitary factor and a canonical triangle") {
    for (int n : {2, 4, 7}) {
        const ComplexMatrix x = testutil::random_ginibre(n, 400 + static_cast<unsigned>(n));
        const lin::QrFactors f = lin::qr(x);
        CHECK((f.q.adjoint() * f.q - ComplexMatrix::identity(n)).max_abs() < 1e-13);
        CHECK(testutil::max_abs_diff(f.q * f.r, x) < 1e-13 * std::max(1.0, x.frobenius_norm()));
        for (int i = 0; i < n; ++i) {
            CHECK(f.r(i, i).imag() == 0.0);
            CHECK(f.r(i, i).real() >= 0.0);
            for (int j = 0; j < i; ++j) {
                CHECK(f.r(i, j).real() == 0.0);
                CHECK(f.r(i, j).imag() == 0.0);
            }
        }
    }
}

TEST_CASE("qr reproduces an upper triangle with positive diagonal exactly") {
    ComplexMatrix t(3);
    t(0, 0) = 2.0;  t(0, 1) = cplx(1.0, -1.0); t(0, 2) = 0.5;
    t(1, 1) = 1.25; t(1, 2) = cplx(0.0, 3.0);
    t(2, 2) = 0.75;
    const lin::QrFactors f = lin::qr(t);
    CHECK(testutil::max_abs_diff(f.r, t) == 0.0);
    CHECK(testutil::max_abs_diff(f.q, ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("cholesky_upper matches the closed form on a 2x2") {
    const ComplexMatrix x = testutil::mat2(2.0, 1.0, 1.0, 3.0);
    const ComplexMatrix u = lin::cholesky_upper(x);
    CHECK(std::abs(u(0, 0) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(u(0, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(u(1, 0) == cplx(0.0, 0.0));
    CHECK(std::abs(u(1, 1) - std::sqrt(2.5)) < 1e-15);
    CHECK(testutil::max_abs_diff(u.adjoint() * u, x) < 1e-15);
}

TEST_CASE("cholesky_upper round-trips random positive definite matrices") {
    for (int n : {2, 5, 9}) {
        ComplexMatrix x = testutil::random_psd(n, 500 + static_cast<unsigned>(n));
        for (int i = 0; i < n; ++i) x(i, i) += 0.1; // keep it safely definite
        const ComplexMatrix u = lin::cholesky_upper(x);
        CHECK(testutil::max_abs_diff(u.adjoint() * u, x) < 1e-12 * x.frobenius_norm());
        for (int i = 0; i < n; ++i) {
            CHECK(u(i, i).imag() == 0.0);
            CHECK(u(i, i).real() > 0.0);
            for (int j = 0; j < i; ++j) CHECK(u(i, j) == cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("cholesky_upper rejects indefinite and non-hermitian input") {
    CHECK_THROWS_AS(lin::cholesky_upper(testutil::mat2(1.0, 0.0, 0.0, -1.0)),
                    sdlab::NotPositiveDefiniteError);
    CHECK_THROWS_AS(lin::cholesky_upper(testutil::mat2(1.0, 2.0, 0.0, 1.0)),
                    sdlab::NotPositiveDefiniteError);
    // singular PSD: rank-one projector
    CHECK_THROWS_AS(lin::cholesky_upper(testutil::mat2(0.5, 0.5, 0.5, 0.5)),
                    sdlab::NotPositiveDefiniteError);
}

TEST_CASE("matrix_function computes spectral square roots") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(4.0), cplx(9.0)});
    const ComplexMatrix r = lin::matrix_function(d, fs::FunctionSpec::sqrt());
    CHECK(std::abs(r(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(r(1, 1) - 3.0) < 1e-14);

    const ComplexMatrix x = testutil::random_psd(4, 600);
    const ComplexMatrix s = lin::matrix_function(x, fs::FunctionSpec::sqrt());
    CHECK(testutil::max_abs_diff(s * s, x) < 1e-11 * std::max(1.0, x.frobenius_norm()));
}

TEST_CASE("matrix_function clamps rounding-level negative eigenvalues") {
    // exact eigenvalues {1, 0}; rounding can leave the small one slightly negative
    const ComplexMatrix p = testutil::mat2(0.5, 0.5, 0.5, 0.5);
    const ComplexMatrix r = lin::matrix_function(p, fs::FunctionSpec::sqrt());
    CHECK(testutil::max_abs_diff(r, p) < 1e-12);

    // a genuinely negative eigenvalue must reach f and fail its domain check
    const ComplexMatrix neg = ComplexMatrix::diagonal({cplx(1.0), cplx(-0.5)});
    CHECK_THROWS_AS(lin::matrix_function(neg, fs::FunctionSpec::sqrt()), sdlab::DomainError);
}

TEST_CASE("lu determinants agree with a full-pivot oracle") {
    for (int n : {2, 4, 6}) {
        const ComplexMatrix x = testutil::random_ginibre(n, 700 + static_cast<unsigned>(n));
        const double oracle = testutil::naive_abs_det(x);
        CHECK(lin::abs_det_lu(x) == doctest::Approx(oracle).epsilon(1e-11));
        CHECK(lin::log_abs_det_lu(x) == doctest::Approx(std::log(oracle)).epsilon(1e-11));
    }
    ComplexMatrix z(3); // rank one, singular
    z(0, 0) = 1.0; z(0, 1) = 2.0; z(0, 2) = 3.0;
    for (int j = 0; j < 3; ++j) { z(1, j) = 2.0 * z(0, j); z(2, j) = -z(0, j); }
    CHECK(lin::abs_det_lu(z) == 0.0);
    CHECK(std::isinf(lin::log_abs_det_lu(z)));
}

TEST_CASE("solve_lu inverts well-conditioned systems") {
    const ComplexMatrix a = testutil::random_ginibre(5, 800);
    const ComplexMatrix b = testutil::random_ginibre(5, 801);
    const ComplexMatrix x = lin::solve_lu(a, b);
    CHECK(testutil::max_abs_diff(a * x, b) < 1e-11 * std::max(1.0, b.frobenius_norm()));

    ComplexMatrix s(2); // singular
    s(0, 0) = 1.0; s(0, 1) = 1.0; s(1, 0) = 1.0; s(1, 1) = 1.0;
    CHECK_THROWS_AS(lin::solve_lu(s, ComplexMatrix::identity(2)), sdlab::NotInvertibleError);
}

TEST_CASE("triangular solves satisfy their defining equations") {
    const int n = 5;
    ComplexMatrix u = lin::qr(testutil::random_ginibre(n, 900)).r;
    for (int i = 0; i < n; ++i) u(i, i) += 1.0; // safely nonsingular
    const ComplexMatrix b = testutil::random_ginibre(n, 901);

    const ComplexMatrix x1 = lin::solve_upper_left(u, b);
    CHECK(testutil::max_abs_diff(u * x1, b) < 1e-12 * b.frobenius_norm());

    const ComplexMatrix x2 = lin::solve_upper_adjoint(u, b);
    CHECK(testutil::max_abs_diff(u.adjoint() * x2, b) < 1e-12 * b.frobenius_norm());

    const ComplexMatrix x3 = lin::solve_upper_right(b, u);
    CHECK(testutil::max_abs_diff(x3 * u, b) < 1e-12 * b.frobenius_norm());
}

TEST_CASE("solve_upper_right keeps structurally zero rows exactly zero") {
    const int n = 4;
    ComplexMatrix u = lin::qr(testutil::random_ginibre(n, 902)).r;
    for (int i = 0; i < n; ++i) u(i, i) += 1.0;
    ComplexMatrix a = testutil::random_ginibre(n, 903);
    for (int j = 0; j < n; ++j) a(2, j) = 0.0;
    const ComplexMatrix x = lin::solve_upper_right(a, u);
    for (int j = 0; j < n; ++j) CHECK(x(2, j) == cplx(0.0, 0.0));
}

} // TEST_SUITE("linalg")
