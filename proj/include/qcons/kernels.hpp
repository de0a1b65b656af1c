#pragma once
//
// Numeric kernels: symmetric eigendecomposition and matrix products.
//
// Two independent eigensolver implementations are kept on purpose:
//
//   eigh_reference — serial Householder tridiagonalization followed by
//                    implicit-shift QL iteration.  The correctness baseline.
//   eigh_jacobi    — two-sided cyclic Jacobi parallelized with OpenMP over a
//                    tournament (round-robin) pairing schedule.  Within one
//                    round all rotations are computed from the same matrix
//                    snapshot and touch disjoint index pairs, then rows and
//                    columns are updated in separate barriers.  Every matrix
//                    entry is written by exactly one pair per phase with a
//                    fixed operation order, so results are bitwise identical
//                    for any thread count.
//
// eigh() dispatches on matrix size only (never on thread count), keeping all
// outputs reproducible byte-for-byte.  The two algorithms cross-validate each
// other in the test suite.
//
#include "qcons/matrix.hpp"

#include <vector>

namespace qcons {

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    Mat eigenvectors;                 // column k pairs with eigenvalues[k]
};

// Serial reference decomposition. Throws std::invalid_argument for non-square
// or empty input.  Accuracy ~1e-14·‖A‖₂ at desk scale.
EighResult eigh_reference(const Mat& A);

// OpenMP two-sided Jacobi decomposition (see header comment).  Same contract.
EighResult eigh_jacobi(const Mat& A);

// Size-based dispatch: Jacobi for n >= 64, reference otherwise.
EighResult eigh(const Mat& A);

// C = A·B, OpenMP-parallel over rows of C; deterministic accumulation order.
Mat matmul(const Mat& A, const Mat& B);

}  // namespace qcons
