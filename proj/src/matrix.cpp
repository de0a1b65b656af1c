#include "qcons/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace qcons {

double max_abs(const Mat& m) {
    double v = 0.0;
    for (double x : m.a) v = std::max(v, std::abs(x));
    return v;
}

double asymmetry(const Mat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("asymmetry: matrix must be square");
    double v = 0.0;
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            v = std::max(v, std::abs(m(i, j) - m(j, i)));
    return v;
}

Mat matmul_serial(const Mat& A, const Mat& B) {
    if (A.cols != B.rows)
        throw std::invalid_argument("matmul_serial: inner dimensions differ");
    Mat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

CMat matmul_serial(const CMat& A, const CMat& B) {
    if (A.cols != B.rows)
        throw std::invalid_argument("matmul_serial: inner dimensions differ");
    CMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const cplx aik = A(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

CMat kron(const CMat& A, const CMat& B) {
    CMat C(A.rows * B.rows, A.cols * B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) {
            const cplx aij = A(i, j);
            if (aij == cplx{}) continue;
            for (int k = 0; k < B.rows; ++k)
                for (int l = 0; l < B.cols; ++l)
                    C(i * B.rows + k, j * B.cols + l) = aij * B(k, l);
        }
    return C;
}

CMat dagger(const CMat& A) {
    CMat C(A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) C(j, i) = std::conj(A(i, j));
    return C;
}

}  // namespace qcons
