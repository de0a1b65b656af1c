#include "qcons/quantum.hpp"

#include "qcons/errors.hpp"
#include "qcons/induced.hpp"
#include "qcons/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace qcons {

namespace {

constexpr std::int64_t kMaxHilbert = 64;  // d^N cap for dense desk-scale work
constexpr double kStateTol = 1e-10;       // Hermiticity / trace validation
constexpr double kKernelRel = 1e-8;       // kernel detection in spectral flows

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void guard_desk_scale(int d, int N) {
    if (d < 2) throw std::invalid_argument("qudit dimension d must be at least 2");
    if (N < 1) throw std::invalid_argument("site count N must be at least 1");
    std::int64_t dim = 1;
    for (int i = 0; i < N; ++i) {
        dim *= d;
        if (dim > kMaxHilbert)
            throw resource_error("Hilbert space dimension d^N exceeds the desk-scale cap " +
                                 std::to_string(kMaxHilbert));
    }
}

void decode(std::int64_t idx, int N, int base, int* digits) {
    for (int i = N - 1; i >= 0; --i) {
        digits[i] = static_cast<int>(idx % base);
        idx /= base;
    }
}

void require_nonnegative_times(const std::vector<double>& times) {
    for (double t : times)
        if (!(t >= 0.0)) throw std::invalid_argument("times must be nonnegative");
}

// Applies the same B×B matrix to every site index of a length-B^N vector
// (site 0 most significant): z ← (M ⊗ ⋯ ⊗ M)·z, one site at a time.
void mode_transform(std::vector<cplx>& z, const CMat& M, int N) {
    const int B = M.rows;
    const std::int64_t total = static_cast<std::int64_t>(z.size());
    std::vector<cplx> t(static_cast<std::size_t>(B));
    for (int site = 0; site < N; ++site) {
        const std::int64_t stride = ipow(B, N - 1 - site);
        const std::int64_t block = stride * B;
        for (std::int64_t start = 0; start < total; start += block) {
            for (std::int64_t off = start; off < start + stride; ++off) {
                for (int nu = 0; nu < B; ++nu) t[static_cast<std::size_t>(nu)] =
                    z[static_cast<std::size_t>(off + nu * stride)];
                for (int mu = 0; mu < B; ++mu) {
                    cplx acc = 0.0;
                    for (int nu = 0; nu < B; ++nu)
                        acc += M(mu, nu) * t[static_cast<std::size_t>(nu)];
                    z[static_cast<std::size_t>(off + mu * stride)] = acc;
                }
            }
        }
    }
}

// Σ_k f(λ_k)·v_k·(v_kᵀ x0) with c = Vᵀ x0 precomputed once per trajectory.
std::vector<double> spectral_coeffs(const EighResult& full, const std::vector<double>& x0) {
    const int n = full.eigenvectors.rows;
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += full.eigenvectors(i, k) * x0[static_cast<std::size_t>(i)];
        c[static_cast<std::size_t>(k)] = s;
    }
    return c;
}

std::vector<double> spectral_flow(const EighResult& full, const std::vector<double>& c,
                                  double t) {
    const int n = full.eigenvectors.rows;
    std::vector<double> y(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        const double f = std::exp(-full.eigenvalues[static_cast<std::size_t>(k)] * t) *
                         c[static_cast<std::size_t>(k)];
        if (f == 0.0) continue;
        for (int i = 0; i < n; ++i)
            y[static_cast<std::size_t>(i)] += f * full.eigenvectors(i, k);
    }
    return y;
}

}  // namespace

// ── Operator basis ───────────────────────────────────────────────────────────

GellMannBasis gell_mann_basis(int d) {
    if (d < 2) throw std::invalid_argument("gell_mann_basis: d must be at least 2");
    GellMannBasis basis;
    basis.d = d;
    basis.matrices.assign(static_cast<std::size_t>(d) * d, CMat(d, d));

    CMat& id = basis.matrices[0];
    for (int i = 0; i < d; ++i) id(i, i) = std::sqrt(2.0 / d);

    for (int j = 2; j <= d; ++j) {
        for (int k = 1; k < j; ++k) {
            CMat& sym = basis.matrices[static_cast<std::size_t>((j - 1) * (j - 1) + 2 * (k - 1))];
            sym(k - 1, j - 1) = 1.0;
            sym(j - 1, k - 1) = 1.0;
            CMat& asym = basis.matrices[static_cast<std::size_t>((j - 1) * (j - 1) + 2 * k - 1)];
            asym(k - 1, j - 1) = cplx(0.0, -1.0);
            asym(j - 1, k - 1) = cplx(0.0, 1.0);
        }
        CMat& diag = basis.matrices[static_cast<std::size_t>(j * j - 1)];
        const double norm = std::sqrt(2.0 / (static_cast<double>(j) * (j - 1)));
        for (int i = 0; i < j - 1; ++i) diag(i, i) = norm;
        diag(j - 1, j - 1) = -norm * (j - 1);
    }
    return basis;
}

CMat swap_operator(int d, int N, int site_a, int site_b) {
    guard_desk_scale(d, N);
    if (site_a == site_b) throw std::invalid_argument("swap_operator: sites must differ");
    if (site_a < 0 || site_b < 0 || site_a >= N || site_b >= N)
        throw std::invalid_argument("swap_operator: site out of range");
    const std::int64_t dim = ipow(d, N);
    CMat S(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> digits(static_cast<std::size_t>(N));
    for (std::int64_t a = 0; a < dim; ++a) {
        decode(a, N, d, digits.data());
        std::swap(digits[static_cast<std::size_t>(site_a)],
                  digits[static_cast<std::size_t>(site_b)]);
        std::int64_t m = 0;
        for (int i = 0; i < N; ++i) m = m * d + digits[static_cast<std::size_t>(i)];
        S(static_cast<int>(m), static_cast<int>(a)) = 1.0;
    }
    return S;
}

// ── Coefficient encoding ─────────────────────────────────────────────────────

CoefficientState expand_density(const CMat& rho, int d, int N) {
    guard_desk_scale(d, N);
    const std::int64_t dim = ipow(d, N);
    if (rho.rows != dim || rho.cols != dim)
        throw std::invalid_argument("expand_density: state must be " + std::to_string(dim) +
                                    "-dimensional");

    double max_entry = 0.0;
    for (const cplx& v : rho.a) max_entry = std::max(max_entry, std::abs(v));
    const double tol = kStateTol * std::max(1.0, max_entry);
    cplx trace = 0.0;
    for (int i = 0; i < rho.rows; ++i) {
        trace += rho(i, i);
        for (int j = i; j < rho.cols; ++j)
            if (std::abs(rho(i, j) - std::conj(rho(j, i))) > tol)
                throw std::invalid_argument("expand_density: state is not Hermitian");
    }
    if (std::abs(trace - 1.0) > tol)
        throw std::invalid_argument("expand_density: state must have unit trace");

    const int B = d * d;
    const GellMannBasis basis = gell_mann_basis(d);

    // Vectorize per site: digit ν = a·d + b holds ρ entry (a,b) of that site.
    const std::int64_t total = ipow(B, N);
    std::vector<cplx> z(static_cast<std::size_t>(total), 0.0);
    std::vector<int> ad(static_cast<std::size_t>(N)), bd(static_cast<std::size_t>(N));
    for (std::int64_t a = 0; a < dim; ++a) {
        decode(a, N, d, ad.data());
        for (std::int64_t b = 0; b < dim; ++b) {
            decode(b, N, d, bd.data());
            std::int64_t nu = 0;
            for (int i = 0; i < N; ++i)
                nu = nu * B + ad[static_cast<std::size_t>(i)] * d +
                     bd[static_cast<std::size_t>(i)];
            z[static_cast<std::size_t>(nu)] = rho(static_cast<int>(a), static_cast<int>(b));
        }
    }

    // x_μ = Tr(ρ·Λ_μ) per site: M(μ, a·d+b) = Λ_μ(b, a).
    CMat M(B, B);
    for (int mu = 0; mu < B; ++mu)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                M(mu, a * d + b) = basis.matrices[static_cast<std::size_t>(mu)](b, a);
    mode_transform(z, M, N);

    CoefficientState s;
    s.d = d;
    s.N = N;
    s.x.resize(static_cast<std::size_t>(total));
    const double scale = std::pow(d / 2.0, N / 2.0);
    for (std::int64_t i = 0; i < total; ++i)
        s.x[static_cast<std::size_t>(i)] = scale * z[static_cast<std::size_t>(i)].real();
    return s;
}

CMat reconstruct_density(const CoefficientState& s) {
    guard_desk_scale(s.d, s.N);
    const int B = s.d * s.d;
    const std::int64_t total = ipow(B, s.N);
    if (static_cast<std::int64_t>(s.x.size()) != total)
        throw std::invalid_argument("reconstruct_density: coefficient length mismatch");

    const GellMannBasis basis = gell_mann_basis(s.d);
    std::vector<cplx> z(s.x.begin(), s.x.end());

    // ρ entry (a,b) per site: W(a·d+b, μ) = Λ_μ(a, b).
    CMat W(B, B);
    for (int mu = 0; mu < B; ++mu)
        for (int a = 0; a < s.d; ++a)
            for (int b = 0; b < s.d; ++b)
                W(a * s.d + b, mu) = basis.matrices[static_cast<std::size_t>(mu)](a, b);
    mode_transform(z, W, s.N);

    const std::int64_t dim = ipow(s.d, s.N);
    CMat rho(static_cast<int>(dim), static_cast<int>(dim));
    const double scale = std::pow(2.0 * s.d, -s.N / 2.0);
    std::vector<int> ad(static_cast<std::size_t>(s.N)), bd(static_cast<std::size_t>(s.N));
    for (std::int64_t a = 0; a < dim; ++a) {
        decode(a, s.N, s.d, ad.data());
        for (std::int64_t b = 0; b < dim; ++b) {
            decode(b, s.N, s.d, bd.data());
            std::int64_t nu = 0;
            for (int i = 0; i < s.N; ++i)
                nu = nu * B + ad[static_cast<std::size_t>(i)] * s.d +
                     bd[static_cast<std::size_t>(i)];
            rho(static_cast<int>(a), static_cast<int>(b)) =
                scale * z[static_cast<std::size_t>(nu)];
        }
    }
    return rho;
}

double frobenius_distance(const CMat& A, const CMat& B) {
    if (A.rows != B.rows || A.cols != B.cols)
        throw std::invalid_argument("frobenius_distance: shape mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < A.a.size(); ++i) {
        const cplx dlt = A.a[i] - B.a[i];
        s += std::norm(dlt);
    }
    return std::sqrt(s);
}

CMat random_density(int dim, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("random_density: dim must be positive");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMat G(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            G(i, j) = cplx(re, im);
        }
    CMat rho(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            cplx acc = 0.0;
            for (int k = 0; k < dim; ++k) acc += G(i, k) * std::conj(G(j, k));
            rho(i, j) = acc;
        }
    cplx trace = 0.0;
    for (int i = 0; i < dim; ++i) trace += rho(i, i);
    for (cplx& v : rho.a) v /= trace.real();
    return rho;
}

CMat consensus_state(const CMat& rho, int d, int N) {
    guard_desk_scale(d, N);
    if (N > 5)
        throw resource_error("consensus_state: permutation average capped at N <= 5");
    const std::int64_t dim = ipow(d, N);
    if (rho.rows != dim || rho.cols != dim)
        throw std::invalid_argument("consensus_state: state must be " + std::to_string(dim) +
                                    "-dimensional");

    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    CMat out(static_cast<int>(dim), static_cast<int>(dim));
    std::vector<int> digits(static_cast<std::size_t>(N));
    std::vector<std::int64_t> image(static_cast<std::size_t>(dim));
    std::int64_t n_perms = 0;
    do {
        for (std::int64_t a = 0; a < dim; ++a) {
            decode(a, N, d, digits.data());
            std::int64_t m = 0;
            for (int i = 0; i < N; ++i)
                m = m * d + digits[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            image[static_cast<std::size_t>(a)] = m;
        }
        for (std::int64_t a = 0; a < dim; ++a)
            for (std::int64_t b = 0; b < dim; ++b)
                out(static_cast<int>(image[static_cast<std::size_t>(a)]),
                    static_cast<int>(image[static_cast<std::size_t>(b)])) +=
                    rho(static_cast<int>(a), static_cast<int>(b));
        ++n_perms;
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (cplx& v : out.a) v /= static_cast<double>(n_perms);
    return out;
}

// ── Dynamics ─────────────────────────────────────────────────────────────────

Mat qcme_generator(const WeightedGraph& g, int d) {
    const int N = g.n_vertices;
    guard_desk_scale(d, N);
    const int B = d * d;
    const std::int64_t total = ipow(B, N);
    Mat L(static_cast<int>(total), static_cast<int>(total));
    std::vector<int> digits(static_cast<std::size_t>(N));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        const double w = g.weights[e];
        const std::int64_t su = ipow(B, N - 1 - u);
        const std::int64_t sv = ipow(B, N - 1 - v);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            decode(idx, N, B, digits.data());
            const int mu = digits[static_cast<std::size_t>(u)];
            const int mv = digits[static_cast<std::size_t>(v)];
            if (mu == mv) continue;  // swap fixes the tuple: no contribution
            const std::int64_t jdx = idx + (mv - mu) * su + (mu - mv) * sv;
            if (jdx < idx) continue;  // each unordered pair once
            L(static_cast<int>(idx), static_cast<int>(idx)) += w;
            L(static_cast<int>(jdx), static_cast<int>(jdx)) += w;
            L(static_cast<int>(idx), static_cast<int>(jdx)) -= w;
            L(static_cast<int>(jdx), static_cast<int>(idx)) -= w;
        }
    }
    return L;
}

std::vector<CoefficientState> qcme_integrate(const WeightedGraph& g, int d,
                                             const CMat& rho0,
                                             const std::vector<double>& times) {
    require_nonnegative_times(times);
    const CoefficientState s0 = expand_density(rho0, d, g.n_vertices);
    const EighResult full = eigh(qcme_generator(g, d));
    const std::vector<double> c = spectral_coeffs(full, s0.x);

    std::vector<CoefficientState> out;
    out.reserve(times.size());
    for (double t : times) {
        CoefficientState s;
        s.d = d;
        s.N = g.n_vertices;
        s.x = spectral_flow(full, c, t);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<double>> ctc_integrate(const WeightedGraph& g,
                                               const std::vector<double>& x0,
                                               const std::vector<double>& times) {
    require_nonnegative_times(times);
    if (static_cast<int>(x0.size()) != g.n_vertices)
        throw std::invalid_argument("ctc_integrate: state length must match vertex count");
    const EighResult full = eigh(laplacian(g));
    const std::vector<double> c = spectral_coeffs(full, x0);
    std::vector<std::vector<double>> out;
    out.reserve(times.size());
    for (double t : times) out.push_back(spectral_flow(full, c, t));
    return out;
}

// ── Quantum → classical reduction check ──────────────────────────────────────

namespace {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::int64_t n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

}  // namespace

ReductionReport verify_reduction(const WeightedGraph& g, int d, const CMat& rho0,
                                 const std::vector<double>& times, double tolerance) {
    const int N = g.n_vertices;
    guard_desk_scale(d, N);
    if (N > 4)
        throw resource_error("verify_reduction: component sweep capped at N <= 4");
    require_nonnegative_times(times);

    const int B = d * d;
    const std::int64_t total = ipow(B, N);

    // Full quantum trajectory.
    const CoefficientState s0 = expand_density(rho0, d, N);
    const EighResult qfull = eigh(qcme_generator(g, d));
    const std::vector<double> qc = spectral_coeffs(qfull, s0.x);
    std::vector<std::vector<double>> quantum;
    quantum.reserve(times.size());
    for (double t : times) quantum.push_back(spectral_flow(qfull, qc, t));

    // Schreier components of the tuple space under edge transpositions.
    UnionFind uf(total);
    std::vector<int> digits(static_cast<std::size_t>(N));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        const std::int64_t su = ipow(B, N - 1 - u);
        const std::int64_t sv = ipow(B, N - 1 - v);
        for (std::int64_t idx = 0; idx < total; ++idx) {
            decode(idx, N, B, digits.data());
            const int mu = digits[static_cast<std::size_t>(u)];
            const int mv = digits[static_cast<std::size_t>(v)];
            if (mu == mv) continue;
            const std::int64_t jdx = idx + (mv - mu) * su + (mu - mv) * sv;
            uf.unite(static_cast<std::int32_t>(idx), static_cast<std::int32_t>(jdx));
        }
    }
    std::map<std::int32_t, std::vector<std::int64_t>> components;
    for (std::int64_t idx = 0; idx < total; ++idx)
        components[uf.find(static_cast<std::int32_t>(idx))].push_back(idx);

    // Classical trajectory per component, on the tabloid graph of its pattern.
    struct BlockStats {
        std::uint64_t components = 0;
        double max_deviation = 0.0;
    };
    std::map<std::vector<int>, BlockStats> stats;
    std::map<std::vector<int>, std::pair<InducedGraph, EighResult>> cache;

    for (const auto& [root, members] : components) {
        decode(members.front(), N, B, digits.data());
        std::map<int, int> count_of_value;
        for (int i = 0; i < N; ++i) ++count_of_value[digits[static_cast<std::size_t>(i)]];

        // Rows by multiplicity descending, then index value ascending.
        std::vector<std::pair<int, int>> rows;  // (−count, value)
        for (const auto& [value, count] : count_of_value) rows.push_back({-count, value});
        std::sort(rows.begin(), rows.end());

        std::vector<int> parts;
        std::map<int, int> row_of_value;  // 1-based
        for (std::size_t r = 0; r < rows.size(); ++r) {
            parts.push_back(-rows[r].first);
            row_of_value[rows[r].second] = static_cast<int>(r) + 1;
        }
        const Partition pat(parts);

        auto it = cache.find(pat.parts);
        if (it == cache.end()) {
            InducedGraph ig = induced_graph(g, pat);
            EighResult dec = eigh(laplacian(ig.graph));
            it = cache.emplace(pat.parts, std::make_pair(std::move(ig), std::move(dec)))
                     .first;
        }
        const InducedGraph& ig = it->second.first;
        const EighResult& dec = it->second.second;

        // Map each tuple onto its tabloid and pull the initial condition.
        const std::size_t n_tab = ig.vertices.size();
        if (n_tab != members.size())
            throw std::runtime_error(
                "verify_reduction: component size does not match the tabloid count");
        std::vector<std::int64_t> tuple_of(n_tab, -1);
        std::vector<double> y0(n_tab, 0.0);
        std::vector<int> word(static_cast<std::size_t>(N));
        for (std::int64_t idx : members) {
            decode(idx, N, B, digits.data());
            for (int i = 0; i < N; ++i)
                word[static_cast<std::size_t>(i)] =
                    row_of_value[digits[static_cast<std::size_t>(i)]];
            const std::size_t tab = tabloid_index(pat, word);
            tuple_of[tab] = idx;
            y0[tab] = s0.x[static_cast<std::size_t>(idx)];
        }

        const std::vector<double> cc = spectral_coeffs(dec, y0);
        double dev = 0.0;
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            const std::vector<double> y = spectral_flow(dec, cc, times[ti]);
            for (std::size_t tab = 0; tab < n_tab; ++tab)
                dev = std::max(dev, std::abs(y[tab] -
                                             quantum[ti][static_cast<std::size_t>(
                                                 tuple_of[tab])]));
        }

        BlockStats& bs = stats[pat.parts];
        ++bs.components;
        bs.max_deviation = std::max(bs.max_deviation, dev);
    }

    ReductionReport report;
    report.tolerance = tolerance;
    for (const Partition& p : enumerate_partitions(N)) {
        const auto it = stats.find(p.parts);
        if (it == stats.end()) continue;
        report.blocks.push_back({p, it->second.components, it->second.max_deviation});
        report.max_deviation = std::max(report.max_deviation, it->second.max_deviation);
    }
    report.passed = report.max_deviation <= tolerance;
    return report;
}

// ── Convergence-rate fit ─────────────────────────────────────────────────────

DecayFit decay_slope(const WeightedGraph& g, int d, const CMat& rho0, int samples) {
    const int N = g.n_vertices;
    guard_desk_scale(d, N);
    if (samples < 2) throw std::invalid_argument("decay_slope: need at least 2 samples");

    const EighResult base = eigh(laplacian(g));
    if (base.eigenvalues.size() < 2)
        throw std::invalid_argument("decay_slope: graph must have at least 2 vertices");
    const double lam2 = base.eigenvalues[1];
    const double base_scale = std::max(1.0, std::abs(base.eigenvalues.back()));
    if (lam2 <= kKernelRel * base_scale)
        throw std::invalid_argument("decay_slope: graph is not connected");

    const CoefficientState s0 = expand_density(rho0, d, N);
    const EighResult qfull = eigh(qcme_generator(g, d));
    const std::vector<double> c = spectral_coeffs(qfull, s0.x);

    // Fixed point = kernel projection of the initial coefficients.
    const double qscale = std::max(1.0, std::abs(qfull.eigenvalues.back()));
    const int n = qfull.eigenvectors.rows;
    std::vector<double> fixed(static_cast<std::size_t>(n), 0.0);
    for (int k = 0; k < n; ++k) {
        if (qfull.eigenvalues[static_cast<std::size_t>(k)] > kKernelRel * qscale) break;
        for (int i = 0; i < n; ++i)
            fixed[static_cast<std::size_t>(i)] +=
                c[static_cast<std::size_t>(k)] * qfull.eigenvectors(i, k);
    }

    DecayFit fit;
    fit.lambda2 = lam2;
    const double t_lo = 2.0 / lam2, t_hi = 6.0 / lam2;
    const double fro_scale = std::pow(static_cast<double>(d), -N / 2.0);
    for (int i = 0; i < samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (samples - 1);
        const std::vector<double> x = spectral_flow(qfull, c, t);
        double dist2 = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            const double dlt = x[j] - fixed[j];
            dist2 += dlt * dlt;
        }
        const double dist = fro_scale * std::sqrt(dist2);
        if (!(dist > 0.0))
            throw std::runtime_error("decay_slope: initial state is already invariant");
        fit.times.push_back(t);
        fit.distances.push_back(dist);
    }

    // Least-squares slope of ln‖ρ(t) − ρ*‖_F against t.
    double tbar = 0.0, ybar = 0.0;
    for (int i = 0; i < samples; ++i) {
        tbar += fit.times[static_cast<std::size_t>(i)];
        ybar += std::log(fit.distances[static_cast<std::size_t>(i)]);
    }
    tbar /= samples;
    ybar /= samples;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double dt = fit.times[static_cast<std::size_t>(i)] - tbar;
        num += dt * (std::log(fit.distances[static_cast<std::size_t>(i)]) - ybar);
        den += dt * dt;
    }
    fit.slope = num / den;
    fit.relative_error = std::abs(fit.slope + lam2) / lam2;
    return fit;
}

}  // namespace qcons
