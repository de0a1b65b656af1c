#pragma once
//
// Dense row-major matrix containers (real and complex) used throughout the
// library.  Deliberately minimal: storage, element access, and the handful of
// algebraic helpers the numerics need.  Heavy operations (eigensolves, large
// products) live in kernels.hpp.
//
#include <complex>
#include <cstddef>
#include <vector>

namespace qcons {

using cplx = std::complex<double>;

struct Mat {
    int rows = 0, cols = 0;
    std::vector<double> a;  // row-major, rows*cols entries

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    bool operator==(const Mat&) const = default;
};

struct CMat {
    int rows = 0, cols = 0;
    std::vector<cplx> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    cplx& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const cplx& operator()(int i, int j) const {
        return a[static_cast<std::size_t>(i) * cols + j];
    }

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

// Largest absolute entry; the max-norm used by the verification routines.
double max_abs(const Mat& m);

// ‖A − Aᵀ‖_max, for symmetry guards.
double asymmetry(const Mat& m);

// Plain O(n·m·k) products for small operands (tests, projections).  The
// OpenMP kernel in kernels.hpp covers the large case.
Mat matmul_serial(const Mat& A, const Mat& B);
CMat matmul_serial(const CMat& A, const CMat& B);

// Kronecker (tensor) product of complex matrices.
CMat kron(const CMat& A, const CMat& B);

// Conjugate transpose.
CMat dagger(const CMat& A);

}  // namespace qcons
