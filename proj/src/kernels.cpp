#include "qcons/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcons {

namespace {

constexpr int kJacobiCutover = 64;     // eigh dispatch threshold
constexpr int kMaxQLIterations = 64;   // per-eigenvalue implicit-shift cap
constexpr int kMaxJacobiSweeps = 64;

// sqrt(a² + b²) without destructive underflow/overflow.
double pythag(double a, double b) {
    const double absa = std::abs(a), absb = std::abs(b);
    if (absa > absb) {
        const double r = absb / absa;
        return absa * std::sqrt(1.0 + r * r);
    }
    if (absb == 0.0) return 0.0;
    const double r = absa / absb;
    return absb * std::sqrt(1.0 + r * r);
}

void require_square(const Mat& A, const char* who) {
    if (A.rows == 0 || A.rows != A.cols)
        throw std::invalid_argument(std::string(who) + ": square non-empty matrix required");
}

// Householder reduction of symmetric A (overwritten) to tridiagonal form with
// diagonal d and sub-diagonal e; the accumulated orthogonal transform replaces
// A so that A_in = A_out · T · A_outᵀ.
void tridiagonalize(Mat& a, std::vector<double>& d, std::vector<double>& e) {
    const int n = a.rows;
    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    a(j, i) = a(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) a(j, k) -= f * e[k] + g * a(i, k);
                }
            }
        } else {
            e[i] = a(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        const int l = i - 1;
        if (d[i] != 0.0) {
            for (int j = 0; j <= l; ++j) {
                double g = 0.0;
                for (int k = 0; k <= l; ++k) g += a(i, k) * a(k, j);
                for (int k = 0; k <= l; ++k) a(k, j) -= g * a(k, i);
            }
        }
        d[i] = a(i, i);
        a(i, i) = 1.0;
        for (int j = 0; j <= l; ++j) a(j, i) = a(i, j) = 0.0;
    }
}

// Implicit-shift QL iteration on the tridiagonal (d, e); eigenvector columns
// accumulated into z.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, Mat& z) {
    const int n = z.rows;
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 || std::abs(e[m]) <= 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (iter++ == kMaxQLIterations)
                    throw std::runtime_error("eigh_reference: QL iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = pythag(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = pythag(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    for (int k = 0; k < n; ++k) {
                        f = z(k, i + 1);
                        z(k, i + 1) = s * z(k, i) + c * f;
                        z(k, i) = c * z(k, i) - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

// Sorts eigenvalues ascending and reorders eigenvector columns to match,
// stably so that degenerate clusters keep a deterministic column order.
EighResult sorted_result(std::vector<double> d, const Mat& z) {
    const int n = z.rows;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return d[static_cast<std::size_t>(i)] <
                                                d[static_cast<std::size_t>(j)]; });
    EighResult out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = Mat(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<std::size_t>(k)];
        out.eigenvalues[static_cast<std::size_t>(k)] = d[static_cast<std::size_t>(src)];
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = z(i, src);
    }
    return out;
}

// Round-robin tournament schedule: `rounds[r]` is a maximal set of disjoint
// index pairs; over all n-1 rounds every unordered pair appears exactly once.
std::vector<std::vector<std::pair<int, int>>> tournament_schedule(int n) {
    const int padded = n % 2 == 0 ? n : n + 1;  // index n acts as a bye
    std::vector<int> arr(static_cast<std::size_t>(padded));
    std::iota(arr.begin(), arr.end(), 0);
    std::vector<std::vector<std::pair<int, int>>> rounds;
    rounds.reserve(static_cast<std::size_t>(padded - 1));
    for (int r = 0; r < padded - 1; ++r) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < padded / 2; ++i) {
            int p = arr[static_cast<std::size_t>(i)];
            int q = arr[static_cast<std::size_t>(padded - 1 - i)];
            if (p >= n || q >= n) continue;  // bye
            if (p > q) std::swap(p, q);
            pairs.emplace_back(p, q);
        }
        rounds.push_back(std::move(pairs));
        // Rotate all entries but the first one position to the right.
        std::rotate(arr.begin() + 1, arr.end() - 1, arr.end());
    }
    return rounds;
}

double offdiag_norm(const Mat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i + 1; j < a.cols; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

double fro_norm(const Mat& a) {
    double s = 0.0;
    for (double x : a.a) s += x * x;
    return std::sqrt(s);
}

}  // namespace

EighResult eigh_reference(const Mat& A) {
    require_square(A, "eigh_reference");
    const int n = A.rows;
    Mat z = A;
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);
    if (n == 1) {
        d[0] = A(0, 0);
        z(0, 0) = 1.0;
        return sorted_result(std::move(d), z);
    }
    tridiagonalize(z, d, e);
    ql_implicit(d, e, z);
    return sorted_result(std::move(d), z);
}

EighResult eigh_jacobi(const Mat& A) {
    require_square(A, "eigh_jacobi");
    const int n = A.rows;
    Mat a = A;
    Mat v = Mat::identity(n);
    if (n == 1) return sorted_result({a(0, 0)}, v);

    const auto rounds = tournament_schedule(n);
    const double stop = 1e-14 * std::max(1e-300, fro_norm(a));

    struct Rotation {
        int p, q;
        double c, s;
    };
    std::vector<Rotation> rot;

    bool converged = false;
    for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
        if (offdiag_norm(a) <= stop) {
            converged = true;
            break;
        }
        for (const auto& round : rounds) {
            const int npairs = static_cast<int>(round.size());
            rot.assign(static_cast<std::size_t>(npairs), {});

            // Phase 1: rotation angles from a common read-only snapshot.
#pragma omp parallel for
            for (int k = 0; k < npairs; ++k) {
                const auto [p, q] = round[static_cast<std::size_t>(k)];
                const double apq = a(p, q);
                double c = 1.0, s = 0.0;
                if (apq != 0.0) {
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    const double t =
                        std::copysign(1.0, theta) / (std::abs(theta) + pythag(theta, 1.0));
                    c = 1.0 / pythag(t, 1.0);
                    s = t * c;
                }
                rot[static_cast<std::size_t>(k)] = {p, q, c, s};
            }

            // Phase 2: A ← JᵀA.  Pairs touch disjoint row sets.
#pragma omp parallel for
            for (int k = 0; k < npairs; ++k) {
                const auto [p, q, c, s] = rot[static_cast<std::size_t>(k)];
                for (int j = 0; j < n; ++j) {
                    const double ap = a(p, j), aq = a(q, j);
                    a(p, j) = c * ap - s * aq;
                    a(q, j) = s * ap + c * aq;
                }
            }

            // Phase 3: A ← AJ and V ← VJ.  Pairs touch disjoint column sets.
#pragma omp parallel for
            for (int k = 0; k < npairs; ++k) {
                const auto [p, q, c, s] = rot[static_cast<std::size_t>(k)];
                for (int i = 0; i < n; ++i) {
                    const double ap = a(i, p), aq = a(i, q);
                    a(i, p) = c * ap - s * aq;
                    a(i, q) = s * ap + c * aq;
                    const double vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
    }

    if (!converged && offdiag_norm(a) > stop * 1e3)
        throw std::runtime_error("eigh_jacobi: sweep limit reached before convergence");

    std::vector<double> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a(i, i);
    return sorted_result(std::move(d), v);
}

EighResult eigh(const Mat& A) {
    require_square(A, "eigh");
    return A.rows >= kJacobiCutover ? eigh_jacobi(A) : eigh_reference(A);
}

Mat matmul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows)
        throw std::invalid_argument("matmul: inner dimensions differ");
    Mat C(A.rows, B.cols);
#pragma omp parallel for
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const double aik = A(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < B.cols; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

}  // namespace qcons
