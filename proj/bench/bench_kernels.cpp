//
// Timing comparison of the serial reference kernels against the OpenMP ones:
//   eigh_reference (Householder + QL)  vs  eigh_jacobi (cyclic Jacobi)
//   matmul_serial                      vs  matmul (row-parallel)
//
// Usage: qcons_bench [max_size]   (default 512; sizes double from 64)
//
#include "qcons/kernels.hpp"
#include "qcons/matrix.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

qcons::Mat random_symmetric(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    qcons::Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m(i, j) = m(j, i) = u(rng);
    return m;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_eig_diff(const qcons::EighResult& a, const qcons::EighResult& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
        d = std::max(d, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    const int max_n = argc > 1 ? std::atoi(argv[1]) : 512;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n\n");
#endif

    std::printf("%-6s %-14s %-14s %-12s %-14s %-14s\n", "n", "eigh_ref [s]",
                "eigh_jac [s]", "max|dλ|", "matmul_s [s]", "matmul [s]");
    for (int n = 64; n <= max_n; n *= 2) {
        const qcons::Mat A = random_symmetric(n, 42 + static_cast<std::uint64_t>(n));

        auto t0 = Clock::now();
        const qcons::EighResult ref = qcons::eigh_reference(A);
        const double t_ref = seconds_since(t0);

        t0 = Clock::now();
        const qcons::EighResult jac = qcons::eigh_jacobi(A);
        const double t_jac = seconds_since(t0);

        t0 = Clock::now();
        const qcons::Mat C1 = qcons::matmul_serial(A, A);
        const double t_ms = seconds_since(t0);

        t0 = Clock::now();
        const qcons::Mat C2 = qcons::matmul(A, A);
        const double t_mp = seconds_since(t0);

        double dC = 0.0;
        for (std::size_t i = 0; i < C1.a.size(); ++i)
            dC = std::max(dC, std::abs(C1.a[i] - C2.a[i]));

        std::printf("%-6d %-14.4f %-14.4f %-12.2e %-14.4f %-14.4f\n", n, t_ref, t_jac,
                    max_eig_diff(ref, jac), t_ms, t_mp);
        if (dC > 1e-9) {
            std::printf("matmul mismatch %g\n", dC);
            return 1;
        }
    }
    return 0;
}
