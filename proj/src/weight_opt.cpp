#include "qcons/weight_opt.hpp"

#include "qcons/errors.hpp"
#include "qcons/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcons {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kClusterRel = 1e-8;     // eigenvalue cluster width for λ₂ multiplicity
constexpr double kCertTol = 1e-6;        // slackness acceptance tolerance (scaled)
constexpr int kCertMaxIters = 2000;      // alternating-projection cap
constexpr int kAscentIters = 300;        // supergradient steps per start
constexpr long kEvalCap = 400000;        // λ₂ evaluations before flagging unconverged

void require_positive_budget(double D) {
    if (!(D > 0.0)) throw std::invalid_argument("weight optimization: D must be positive");
}

OptimalResult make_result(const WeightedGraph& g, std::map<int, double> w, double lambda2,
                          OptMethod method) {
    OptimalResult r;
    r.weights_by_orbit = std::move(w);
    r.lambda2 = lambda2;
    r.method = method;
    r.budget_used = 0.0;
    for (const auto& [label, wt] : r.weights_by_orbit)
        r.budget_used += g.orbit_size(label) * wt;
    return r;
}

// ── Closed forms for the symmetric catalog ───────────────────────────────────
//
// Weight maps are keyed by the orbit labels of the corresponding builder.

// Even path on 2(q+1) vertices: central edge orbit 0, depth-j edges orbit j.
// Valid for q ≥ 0 (q = 0 is the single edge).
std::pair<std::map<int, double>, double> even_path_weights(int q, double D) {
    std::map<int, double> w;
    const double denom = static_cast<double>(q + 1) * (2 * q + 1) * (2 * q + 3);
    w[0] = 3.0 * D * (q + 1) / (static_cast<double>(2 * q + 3) * (2 * q + 1));
    for (int j = 1; j <= q; ++j)
        w[j] = 3.0 * D * ((q + 1.0) * (q + 1.0) - j * j) / denom;
    return {w, 6.0 * D / denom};
}

// Symmetric star: p ≥ 2 branches of length q from a hub; depth-j orbit j.
std::pair<std::map<int, double>, double> symmetric_star_weights(int p, int q, double D) {
    std::map<int, double> w;
    const double denom = static_cast<double>(p) * q * (q + 1) * (2 * q + 1);
    for (int j = 1; j <= q; ++j)
        w[j] = 3.0 * D * (q + j) * (q - j + 1) / denom;
    return {w, 6.0 * D / denom};
}

// Complete-core star: p ≥ 2 core vertices (orbit 0 core edges), branch depth-j
// edges orbit j.
std::pair<std::map<int, double>, double> ccs_star_weights(int p, int q, double D) {
    const double r = std::sqrt(2.0 * p * (p - 1));
    std::map<int, double> w;
    w[0] = 3.0 * D * (2.0 * p - 2.0 + q * r) /
           (static_cast<double>(p) * (p - 1) *
            (3.0 * p - 3.0 + 3.0 * q * r + 2.0 * p * q * q + static_cast<double>(p) * q));
    const double wj_denom = 3.0 * p * (q + 1.0) * (p - 1.0 + q * r) +
                            static_cast<double>(p) * p * q * (q + 1) * (2 * q + 1);
    for (int j = 1; j <= q; ++j)
        w[j] = 3.0 * D * (r * (q - j + 1) + static_cast<double>(p) * (q - j + 1) * (q + j)) /
               wj_denom;
    const double lam = 6.0 * D /
                       (3.0 * (p - 1) * (q + 1) + 3.0 * r * q * (q + 1) +
                        static_cast<double>(p) * q * (q + 1) * (2 * q + 1));
    return {w, lam};
}

// Palm: hub with p ≥ 1 leaves (orbit 0) and a tail of length q (orbits 1..q).
// Two regimes split at 2p = q(q+1).
std::pair<std::map<int, double>, double> palm_weights(int p, int q, double D) {
    std::map<int, double> w;
    if (2 * p > q * (q + 1)) {
        const double s = 6.0 * D / (6.0 * p + static_cast<double>(q) * (q + 1) * (2 * q + 1));
        w[0] = s;
        for (int j = 1; j <= q; ++j) w[j] = s * (q + j) * (q - j + 1) / 2.0;
        return {w, s};
    }
    const double s = 12.0 * D * (p + q + 1) /
                     (static_cast<double>(q + 1) * (q + 2) *
                      (6.0 * p + static_cast<double>(q) * (q + 4 * p + 1)));
    w[0] = s * (q + 1) * (q + 2) / (2.0 * (p + q + 1));
    for (int j = 1; j <= q; ++j)
        w[j] = s * (q - j + 1) * (static_cast<double>(p) * (q + j + 2) + (q + 1.0) * j) /
               (2.0 * (p + q + 1));
    return {w, s};
}

// Lollipop: complete graph on p+1 vertices with a tail of length q on one of
// them.  Orbits: −1 core edges, 0 bridge edges, 1..q tail edges.  In the
// first regime (q(q+1) ≤ √(2p(p+1))) the core edges carry weight; past it
// they are worthless and the optimum coincides with the palm optimum.
std::pair<std::map<int, double>, double> lollipop_weights(int p, int q, double D) {
    const std::int64_t qq = static_cast<std::int64_t>(q) * (q + 1);
    const bool regime1 = qq * qq <= static_cast<std::int64_t>(2) * p * (p + 1);
    if (!regime1) {
        auto [w, lam] = palm_weights(p, q, D);
        w[-1] = 0.0;
        return {w, lam};
    }
    const double c = std::sqrt((p + 1.0) / (2.0 * p));
    const double ub = (p * c - q * (q + 1) / 2.0) / (p + q + 1.0);
    // Per-unit-of-λ₂ weights; the scale s is fixed by the budget.
    const double per_core = ub / (p * c);
    const double per_bridge = 1.0 - ub / c;
    double budget_units = p * (p - 1) / 2.0 * per_core + p * per_bridge;
    std::vector<double> per_tail(static_cast<std::size_t>(q));
    for (int j = 1; j <= q; ++j) {
        per_tail[static_cast<std::size_t>(j - 1)] = (q - j + 1) * (2.0 * ub + q + j) / 2.0;
        budget_units += per_tail[static_cast<std::size_t>(j - 1)];
    }
    const double s = D / budget_units;
    std::map<int, double> w;
    w[-1] = s * per_core;
    w[0] = s * per_bridge;
    for (int j = 1; j <= q; ++j) w[j] = s * per_tail[static_cast<std::size_t>(j - 1)];
    return {w, s};
}

// Two-branch complete-core star, assembled from the block inverse Gram.
std::pair<std::map<int, double>, double> two_branch_weights(int p, int q1, int q2,
                                                            double D) {
    const Mat Gi = gram_two_branch_inverse(q1, q2);
    const int n = q1 + q2 + 1;
    const int zero = q1;  // storage index of row 0
    const double r = std::sqrt(static_cast<double>(p) * (p - 1));

    double sum0 = 0.0, sum_all = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == zero) continue;
        sum0 += Gi(zero, i);
        for (int j = 0; j < n; ++j)
            if (j != zero) sum_all += Gi(i, j);
    }
    const double lam =
        2.0 * D / ((p - 1) * Gi(zero, zero) + 2.0 * r * sum0 + p * sum_all);

    std::map<int, double> w;
    w[0] = lam * ((p - 1) * Gi(zero, zero) + r * sum0) /
           (static_cast<double>(p) * (p - 1));
    for (int mu = -q1; mu <= q2; ++mu) {
        if (mu == 0) continue;
        const int i = mu + q1;
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != zero) row_sum += Gi(i, j);
        w[mu] = lam * (r * Gi(i, zero) + p * row_sum) / (2.0 * p);
    }
    return {w, lam};
}

// Symmetric coupled complete graphs (N1 = N3): orbits −2/2 outer cliques,
// ±1 couplings, 0 shared clique.  Regimes split at 2N1 = N2.
std::pair<std::map<int, double>, double> coupled_weights(int N1, int N2, double D) {
    std::map<int, double> w;
    double lam;
    if (2 * N1 < N2) {
        lam = 2.0 * N2 * D /
              (4.0 * N1 * N2 + static_cast<double>(N2 - 1) * (N2 - 2 * N1));
        w[-1] = w[1] = lam / N2;
        w[0] = lam * (N2 - 2 * N1) / (static_cast<double>(N2) * N2);
    } else {
        lam = D / (2.0 * N1);
        w[-1] = w[1] = D / (2.0 * N1 * N2);
        w[0] = 0.0;
    }
    w[-2] = w[2] = 0.0;
    return {w, lam};
}

}  // namespace

std::string method_name(OptMethod m) {
    switch (m) {
        case OptMethod::closed_form: return "closed_form";
        case OptMethod::lp_equalization: return "lp_equalization";
        case OptMethod::numeric: return "numeric";
    }
    return "unknown";
}

OptimalResult closed_form(const TopologySpec& spec, double D) {
    require_positive_budget(D);
    const WeightedGraph g = build_topology(spec);

    std::map<int, double> w;
    double lam = 0.0;
    switch (spec.kind) {
        case Topology::path: {
            if (spec.N % 2 == 0) {
                std::tie(w, lam) = even_path_weights(spec.N / 2 - 1, D);
            } else {
                std::tie(w, lam) = symmetric_star_weights(2, (spec.N - 1) / 2, D);
            }
            break;
        }
        case Topology::star: {
            if (spec.N == 2) {
                w[0] = D;
                lam = 2.0 * D;
            } else {
                w[0] = D / (spec.N - 1);
                lam = D / (spec.N - 1);
            }
            break;
        }
        case Topology::cycle: {
            w[0] = D / spec.N;
            lam = 2.0 * (1.0 - std::cos(2.0 * kPi / spec.N)) * D / spec.N;
            break;
        }
        case Topology::complete: {
            w[0] = 2.0 * D / (static_cast<double>(spec.N) * (spec.N - 1));
            lam = 2.0 * D / (spec.N - 1);
            break;
        }
        case Topology::paw: {
            w[0] = 0.0;  // the chord is worthless at the optimum
            w[1] = D / 4.0;
            lam = D / 2.0;
            break;
        }
        case Topology::lollipop:
            std::tie(w, lam) = lollipop_weights(spec.p, spec.q, D);
            break;
        case Topology::ccs_star:
            std::tie(w, lam) = ccs_star_weights(spec.p, spec.q, D);
            break;
        case Topology::ccs_two_branch:
            std::tie(w, lam) = two_branch_weights(spec.p, spec.q1, spec.q2, D);
            break;
        case Topology::symmetric_star:
            std::tie(w, lam) = symmetric_star_weights(spec.p, spec.q, D);
            break;
        case Topology::palm:
            std::tie(w, lam) = palm_weights(spec.p, spec.q, D);
            break;
        case Topology::coupled_complete: {
            if (spec.N1 != spec.N3)
                throw unsupported_error(
                    "closed_form: coupled_complete requires N1 = N3; use the numeric "
                    "maximizer for nonsymmetric instances");
            std::tie(w, lam) = coupled_weights(spec.N1, spec.N2, D);
            // Drop labels for orbits the builder leaves empty (e.g. ±2 at N1=1).
            const auto labels = g.orbit_labels();
            for (auto it = w.begin(); it != w.end();)
                it = std::find(labels.begin(), labels.end(), it->first) == labels.end()
                         ? w.erase(it)
                         : std::next(it);
            break;
        }
        case Topology::cartesian_product:
            return lp_cartesian(spec.factors, D);
    }
    return make_result(g, std::move(w), lam, OptMethod::closed_form);
}

OptimalResult lp_cartesian(const std::vector<TopologySpec>& factors, double D) {
    require_positive_budget(D);
    if (factors.empty())
        throw std::invalid_argument("lp_cartesian: at least one factor required");

    // Per factor: unit-weight gap λ_{i,2} and edge count m_i.
    std::vector<double> unit_gap, edge_count, vertex_count;
    for (const TopologySpec& f : factors) {
        switch (f.kind) {
            case Topology::complete:
                if (f.N < 2) throw std::invalid_argument("lp_cartesian: complete N >= 2");
                unit_gap.push_back(static_cast<double>(f.N));
                edge_count.push_back(f.N * (f.N - 1) / 2.0);
                vertex_count.push_back(f.N);
                break;
            case Topology::cycle:
                if (f.N < 3) throw std::invalid_argument("lp_cartesian: cycle N >= 3");
                unit_gap.push_back(2.0 * (1.0 - std::cos(2.0 * kPi / f.N)));
                edge_count.push_back(f.N);
                vertex_count.push_back(f.N);
                break;
            default:
                throw unsupported_error(
                    "lp_cartesian: factor " + f.str() +
                    " is not edge-transitive (complete graphs and cycles only)");
        }
    }

    double total_vertices = 1.0;
    for (double nv : vertex_count) total_vertices *= nv;

    // Orbit i+1 holds factor i's edges, replicated across the other factors.
    // Equalize w_i λ_{i,2} = s and spend the whole budget.
    double cost = 0.0;
    std::vector<double> orbit_size(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        orbit_size[i] = edge_count[i] * (total_vertices / vertex_count[i]);
        cost += orbit_size[i] / unit_gap[i];
    }
    const double s = D / cost;

    std::map<int, double> w;
    for (std::size_t i = 0; i < factors.size(); ++i)
        w[static_cast<int>(i) + 1] = s / unit_gap[i];

    TopologySpec prod;
    prod.kind = Topology::cartesian_product;
    prod.factors = factors;
    return make_result(build_topology(prod), std::move(w), s, OptMethod::lp_equalization);
}

// ── Numeric maximizer ────────────────────────────────────────────────────────

namespace {

// Euclidean projection onto the probability simplex {x ≥ 0, Σx = 1}.
void project_simplex(std::vector<double>& x) {
    std::vector<double> u = x;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        css += u[i];
        const double t = (css - 1.0) / static_cast<double>(i + 1);
        if (u[i] - t > 0.0) theta = t;
    }
    for (double& v : x) v = std::max(v - theta, 0.0);
}

struct OrbitProblem {
    const WeightedGraph* g = nullptr;
    double D = 1.0;
    std::vector<int> labels;
    std::vector<double> sizes;
    std::vector<int> edge_orbit;  // per edge: index into labels

    int n() const { return g->n_vertices; }
    int k() const { return static_cast<int>(labels.size()); }

    // Weighted Laplacian at simplex point x (x_i = share of budget on orbit i).
    Mat laplacian_at(const std::vector<double>& x) const {
        Mat L(g->n_vertices, g->n_vertices);
        for (std::size_t e = 0; e < g->edges.size(); ++e) {
            const auto [u, v] = g->edges[e];
            const double w =
                D * x[static_cast<std::size_t>(edge_orbit[e])] /
                sizes[static_cast<std::size_t>(edge_orbit[e])];
            L(u, u) += w;
            L(v, v) += w;
            L(u, v) -= w;
            L(v, u) -= w;
        }
        return L;
    }

    double lambda2(const std::vector<double>& x, long& evals) const {
        ++evals;
        return eigh(laplacian_at(x)).eigenvalues[1];
    }

    // λ₂ plus its supergradient in x, from the λ₂-eigenvector cluster.
    double lambda2_grad(const std::vector<double>& x, std::vector<double>& grad,
                        long& evals) const {
        ++evals;
        const EighResult full = eigh(laplacian_at(x));
        const double lam = full.eigenvalues[1];
        const double scale =
            std::max(std::abs(full.eigenvalues.front()), std::abs(full.eigenvalues.back()));
        const double tol = kClusterRel * std::max(1.0, scale);

        int lo = 1, hi = 1;
        while (hi + 1 < static_cast<int>(full.eigenvalues.size()) &&
               std::abs(full.eigenvalues[static_cast<std::size_t>(hi + 1)] - lam) <= tol)
            ++hi;
        const int m = hi - lo + 1;

        grad.assign(static_cast<std::size_t>(k()), 0.0);
        for (std::size_t e = 0; e < g->edges.size(); ++e) {
            const auto [u, v] = g->edges[e];
            double q = 0.0;
            for (int c = lo; c <= hi; ++c)
                q += (full.eigenvectors(u, c) - full.eigenvectors(v, c)) *
                     (full.eigenvectors(u, c) - full.eigenvectors(v, c));
            q /= m;
            const std::size_t oi = static_cast<std::size_t>(edge_orbit[e]);
            grad[oi] += q * D / sizes[oi];  // dλ₂/dx_i = Σ_e∈orbit q_e · D/size_i
        }
        return lam;
    }
};

struct AscentOutcome {
    double lambda2 = -1.0;
    std::vector<double> x;
};

AscentOutcome run_ascent(const OrbitProblem& prob, std::vector<double> x, long& evals) {
    AscentOutcome best;
    std::vector<double> grad;
    for (int t = 0; t < kAscentIters; ++t) {
        const double lam = prob.lambda2_grad(x, grad, evals);
        if (lam > best.lambda2) {
            best.lambda2 = lam;
            best.x = x;
        }
        double norm = 0.0;
        for (double gi : grad) norm += gi * gi;
        norm = std::sqrt(norm);
        if (norm < 1e-15) break;  // flat supergradient: interior optimum reached
        const double step = 0.4 / std::sqrt(t + 1.0);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += step * grad[i] / norm;
        project_simplex(x);
    }
    return best;
}

}  // namespace

OptimalResult maximize_gap_numeric(const WeightedGraph& g, double D) {
    require_positive_budget(D);
    if (!is_connected(g))
        throw std::invalid_argument("maximize_gap_numeric: graph must be connected");

    OrbitProblem prob;
    prob.g = &g;
    prob.D = D;
    prob.labels = g.orbit_labels();
    if (prob.labels.size() > 8)
        throw std::invalid_argument("maximize_gap_numeric: more than 8 edge orbits");
    for (int label : prob.labels)
        prob.sizes.push_back(static_cast<double>(g.orbit_size(label)));
    prob.edge_orbit.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        prob.edge_orbit[e] = static_cast<int>(
            std::find(prob.labels.begin(), prob.labels.end(), g.orbit_of_edge[e]) -
            prob.labels.begin());

    const int k = prob.k();
    long evals = 0;
    bool converged = true;

    std::vector<double> x;
    if (k == 1) {
        x = {1.0};
    } else {
        // Deterministic multi-start: uniform plus seeded random simplex points.
        const int n_starts = std::max(4, 2 * k);
        std::vector<std::vector<double>> starts(static_cast<std::size_t>(n_starts));
        starts[0].assign(static_cast<std::size_t>(k), 1.0 / k);
        for (int s = 1; s < n_starts; ++s) {
            std::mt19937_64 rng(0x9E3779B97F4A7C15ull ^ static_cast<std::uint64_t>(s));
            std::exponential_distribution<double> exp_draw(1.0);
            std::vector<double> pt(static_cast<std::size_t>(k));
            double total = 0.0;
            for (double& v : pt) total += (v = exp_draw(rng));
            for (double& v : pt) v /= total;
            starts[static_cast<std::size_t>(s)] = std::move(pt);
        }

        std::vector<AscentOutcome> outcomes(starts.size());
        std::vector<long> eval_counts(starts.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (int s = 0; s < n_starts; ++s)
            outcomes[static_cast<std::size_t>(s)] =
                run_ascent(prob, starts[static_cast<std::size_t>(s)],
                           eval_counts[static_cast<std::size_t>(s)]);
        for (long c : eval_counts) evals += c;

        // Deterministic merge: best λ₂, ties broken lexicographically on x.
        std::size_t best = 0;
        for (std::size_t s = 1; s < outcomes.size(); ++s) {
            if (outcomes[s].lambda2 > outcomes[best].lambda2 ||
                (outcomes[s].lambda2 == outcomes[best].lambda2 &&
                 outcomes[s].x < outcomes[best].x))
                best = s;
        }
        x = outcomes[best].x;

        // Budget-transfer pattern search: move δ of the budget share between
        // orbit pairs, halving δ; exact zeros are reachable because a move
        // takes min(δ, x_a).
        double cur = prob.lambda2(x, evals);
        for (double delta = 0.25; delta >= 1e-11; delta *= 0.5) {
            bool improved = true;
            int sweeps = 0;
            while (improved && sweeps < 100) {
                improved = false;
                ++sweeps;
                for (int a = 0; a < k; ++a) {
                    const std::size_t ai = static_cast<std::size_t>(a);
                    if (x[ai] <= 0.0) continue;
                    for (int b = 0; b < k; ++b) {
                        if (a == b) continue;
                        if (evals > kEvalCap) {
                            converged = false;
                            goto search_done;
                        }
                        const double move = std::min(delta, x[ai]);
                        std::vector<double> y = x;
                        y[ai] -= move;
                        if (y[ai] < 1e-15) y[ai] = 0.0;
                        y[static_cast<std::size_t>(b)] += move;
                        const double val = prob.lambda2(y, evals);
                        if (val > cur + 1e-14 * std::max(1.0, std::abs(cur))) {
                            x = std::move(y);
                            cur = val;
                            improved = true;
                        }
                    }
                }
            }
        }
    search_done:;
    }

    // Exact budget: renormalize the simplex point before reading out weights.
    double total = std::accumulate(x.begin(), x.end(), 0.0);
    for (double& v : x) v /= total;

    std::map<int, double> w;
    for (int i = 0; i < k; ++i)
        w[prob.labels[static_cast<std::size_t>(i)]] =
            D * x[static_cast<std::size_t>(i)] / prob.sizes[static_cast<std::size_t>(i)];

    long final_evals = 0;
    const double lam = prob.lambda2(x, final_evals);
    OptimalResult r = make_result(g, std::move(w), lam, OptMethod::numeric);
    r.converged = converged;
    return r;
}

// ── Dual certificate ─────────────────────────────────────────────────────────

namespace {

// Symmetric m×m matrices are vectorized with off-diagonal √2 scaling so the
// Frobenius inner product becomes the ordinary dot product.
std::vector<double> sym_vec(const Mat& A) {
    const int m = A.rows;
    std::vector<double> v;
    v.reserve(static_cast<std::size_t>(m * (m + 1) / 2));
    for (int i = 0; i < m; ++i) {
        v.push_back(A(i, i));
        for (int j = i + 1; j < m; ++j) v.push_back(A(i, j) * std::sqrt(2.0));
    }
    return v;
}

Mat sym_unvec(const std::vector<double>& v, int m) {
    Mat A(m, m);
    std::size_t p = 0;
    for (int i = 0; i < m; ++i) {
        A(i, i) = v[p++];
        for (int j = i + 1; j < m; ++j) {
            A(i, j) = A(j, i) = v[p] / std::sqrt(2.0);
            ++p;
        }
    }
    return A;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

CertificateReport dual_certificate(const WeightedGraph& g, const OptimalResult& result,
                                   double D) {
    require_positive_budget(D);
    const WeightedGraph gw = g.with_orbit_weights(result.weights_by_orbit);
    if (gw.n_vertices < 2)
        throw certificate_unavailable_error("dual_certificate: graph has no gap eigenspace");
    const Mat L = laplacian(gw);
    const EighResult full = eigh(L);
    const double lam2 = full.eigenvalues[1];
    const double scale =
        std::max(std::abs(full.eigenvalues.front()), std::abs(full.eigenvalues.back()));
    const double cluster_tol = kClusterRel * std::max(1.0, scale);

    // λ₂-eigenvector cluster V (n×m).
    int hi = 1;
    while (hi + 1 < L.rows &&
           std::abs(full.eigenvalues[static_cast<std::size_t>(hi + 1)] - lam2) <= cluster_tol)
        ++hi;
    const int m = hi;  // indices 1..hi
    if (m <= 0)
        throw certificate_unavailable_error("dual_certificate: empty gap eigenspace");

    const double theta = lam2 / D;
    const double accept_tol = kCertTol * std::max(1.0, std::abs(theta));

    // Per edge: y_e = Vᵀ(e_u − e_v); constraint ⟨y_e y_eᵀ, A⟩ = θ on the
    // support, ≤ θ on zero-weight edges; plus Tr A = 1; plus A ⪰ 0.
    const std::size_t E = gw.edges.size();
    double wmax = 0.0;
    for (double wv : gw.weights) wmax = std::max(wmax, wv);
    const double support_tol = 1e-9 * std::max(wmax, D / std::max<double>(1.0, E));

    std::vector<std::vector<double>> edge_rows(E);
    std::vector<bool> in_support(E);
    for (std::size_t e = 0; e < E; ++e) {
        const auto [u, v] = gw.edges[e];
        Mat C(m, m);
        for (int a = 0; a < m; ++a) {
            const double ya = full.eigenvectors(u, a + 1) - full.eigenvectors(v, a + 1);
            for (int b = 0; b < m; ++b) {
                const double yb = full.eigenvectors(u, b + 1) - full.eigenvectors(v, b + 1);
                C(a, b) = ya * yb;
            }
        }
        edge_rows[e] = sym_vec(C);
        in_support[e] = gw.weights[e] > support_tol;
    }

    // Affine system: support equalities + unit trace.
    std::vector<const std::vector<double>*> rows;
    std::vector<double> rhs;
    for (std::size_t e = 0; e < E; ++e)
        if (in_support[e]) {
            rows.push_back(&edge_rows[e]);
            rhs.push_back(theta);
        }
    const std::vector<double> trace_row = sym_vec(Mat::identity(m));
    rows.push_back(&trace_row);
    rhs.push_back(1.0);

    const int R = static_cast<int>(rows.size());
    Mat gram(R, R);
    for (int i = 0; i < R; ++i)
        for (int j = i; j < R; ++j)
            gram(i, j) = gram(j, i) = dot(*rows[static_cast<std::size_t>(i)],
                                          *rows[static_cast<std::size_t>(j)]);
    const EighResult ge = eigh(gram);
    const double gcut = 1e-12 * std::max(1.0, ge.eigenvalues.back());

    // Least-squares projection onto the affine set via the pseudo-inverse of
    // the constraint Gram matrix.
    const auto affine_project = [&](std::vector<double>& a) {
        std::vector<double> resid(static_cast<std::size_t>(R));
        for (int i = 0; i < R; ++i)
            resid[static_cast<std::size_t>(i)] =
                dot(*rows[static_cast<std::size_t>(i)], a) - rhs[static_cast<std::size_t>(i)];
        // coef = pinv(gram)·resid
        std::vector<double> coef(static_cast<std::size_t>(R), 0.0);
        for (int k2 = 0; k2 < R; ++k2) {
            if (ge.eigenvalues[static_cast<std::size_t>(k2)] <= gcut) continue;
            double proj = 0.0;
            for (int i = 0; i < R; ++i)
                proj += ge.eigenvectors(i, k2) * resid[static_cast<std::size_t>(i)];
            proj /= ge.eigenvalues[static_cast<std::size_t>(k2)];
            for (int i = 0; i < R; ++i)
                coef[static_cast<std::size_t>(i)] += ge.eigenvectors(i, k2) * proj;
        }
        for (int i = 0; i < R; ++i)
            for (std::size_t t = 0; t < a.size(); ++t)
                a[t] -= coef[static_cast<std::size_t>(i)] *
                        (*rows[static_cast<std::size_t>(i)])[t];
    };

    const auto violation_of = [&](const std::vector<double>& a) {
        double v = 0.0;
        for (std::size_t e = 0; e < E; ++e) {
            const double ge_val = dot(edge_rows[e], a);
            if (in_support[e]) v = std::max(v, std::abs(ge_val - theta));
            else v = std::max(v, ge_val - theta);
        }
        v = std::max(v, std::abs(dot(trace_row, a) - 1.0));
        return v;
    };

    // Alternating projections: affine → zero-edge halfspaces → PSD cone.
    std::vector<double> a = sym_vec(Mat::identity(m));
    for (double& t : a) t /= m;
    CertificateReport report;
    report.common_value = theta;
    report.eigenspace_dim = m;

    double v = violation_of(a);
    int iter = 0;
    for (; iter < kCertMaxIters && v > 0.5 * accept_tol; ++iter) {
        affine_project(a);
        for (std::size_t e = 0; e < E; ++e) {
            if (in_support[e]) continue;
            const double excess = dot(edge_rows[e], a) - theta;
            if (excess > 0.0) {
                const double nn = dot(edge_rows[e], edge_rows[e]);
                for (std::size_t t = 0; t < a.size(); ++t)
                    a[t] -= excess / nn * edge_rows[e][t];
            }
        }
        // PSD projection: clip negative eigenvalues.
        const EighResult ae = eigh(sym_unvec(a, m));
        Mat A(m, m);
        for (int k2 = 0; k2 < m; ++k2) {
            const double ev = ae.eigenvalues[static_cast<std::size_t>(k2)];
            if (ev <= 0.0) continue;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    A(i, j) += ev * ae.eigenvectors(i, k2) * ae.eigenvectors(j, k2);
        }
        a = sym_vec(A);
        v = violation_of(a);
    }

    report.iterations = iter;
    report.max_violation = v;
    report.accepted = v <= accept_tol;
    return report;
}

// ── Gram machinery ───────────────────────────────────────────────────────────

Mat gram_ccs(int q) {
    if (q < 1) throw std::invalid_argument("gram_ccs: q >= 1 required");
    Mat G(q + 1, q + 1);
    for (int i = 0; i <= q; ++i) G(i, i) = 1.0;
    G(0, 1) = G(1, 0) = -1.0 / std::sqrt(2.0);
    for (int j = 1; j < q; ++j) G(j, j + 1) = G(j + 1, j) = -0.5;
    return G;
}

Mat gram_inverse_ccs(int q) {
    if (q < 1) throw std::invalid_argument("gram_inverse_ccs: q >= 1 required");
    Mat Gi(q + 1, q + 1);
    Gi(0, 0) = q + 1;
    for (int j = 1; j <= q; ++j)
        Gi(0, j) = Gi(j, 0) = std::sqrt(2.0) * (q - j + 1);
    for (int i = 1; i <= q; ++i)
        for (int j = 1; j <= q; ++j)
            Gi(i, j) = 2.0 * std::min(q - i + 1, q - j + 1);
    return Gi;
}

Mat gram_two_branch(int q1, int q2) {
    if (q1 < 1 || q2 < 1)
        throw std::invalid_argument("gram_two_branch: q1, q2 >= 1 required");
    const int n = q1 + q2 + 1;
    const int z = q1;  // storage index of row 0
    Mat G(n, n);
    for (int i = 0; i < n; ++i) G(i, i) = 1.0;
    G(z, z + 1) = G(z + 1, z) = -1.0 / std::sqrt(2.0);
    G(z, z - 1) = G(z - 1, z) = -1.0 / std::sqrt(2.0);
    for (int j = 1; j < q2; ++j)
        G(z + j, z + j + 1) = G(z + j + 1, z + j) = -0.5;
    for (int j = 1; j < q1; ++j)
        G(z - j, z - j - 1) = G(z - j - 1, z - j) = -0.5;
    G(z - 1, z + 1) = G(z + 1, z - 1) = 0.5;  // coupling of the innermost rows
    return G;
}

Mat gram_two_branch_inverse(int q1, int q2) {
    if (q1 < 1 || q2 < 1)
        throw std::invalid_argument("gram_two_branch_inverse: q1, q2 >= 1 required");
    const int n = q1 + q2 + 1;
    const int z = q1;
    Mat Gi(n, n);
    Gi(z, z) = q1 + q2 + 1;
    const auto branch_len = [&](int mu) { return mu < 0 ? q1 : q2; };
    for (int mu = -q1; mu <= q2; ++mu) {
        if (mu == 0) continue;
        Gi(z, mu + z) = Gi(mu + z, z) =
            std::sqrt(2.0) * (branch_len(mu) - std::abs(mu) + 1);
        for (int nu = -q1; nu <= q2; ++nu) {
            if (nu == 0 || (mu < 0) != (nu < 0)) continue;  // cross-branch: zero
            Gi(mu + z, nu + z) = 2.0 * std::min(branch_len(mu) - std::abs(mu) + 1,
                                                branch_len(nu) - std::abs(nu) + 1);
        }
    }
    return Gi;
}

}  // namespace qcons
