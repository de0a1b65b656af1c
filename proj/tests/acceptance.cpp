// Acceptance gate: ten numbered criteria, one PASS/FAIL line each.
//
// Usage: qcons_acceptance [n]    n in 1..10 runs a single criterion;
//                                no argument runs all ten.
// Exit code: 0 iff every selected criterion passed.
//
// Criterion 1 is expected to FAIL on the lollipop row by design: the pinned
// reference values for that topology spend more than the unit budget, and the
// library reports the true unit-budget optimum instead.  The failure message
// states the exact rescaling identity connecting the two.

#include "qcons/errors.hpp"
#include "qcons/graph.hpp"
#include "qcons/induced.hpp"
#include "qcons/matrix.hpp"
#include "qcons/partition.hpp"
#include "qcons/quantum.hpp"
#include "qcons/spectral.hpp"
#include "qcons/weight_opt.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace qcons;

namespace {

int checks_failed = 0;
std::vector<std::string> notes;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++checks_failed;
        notes.push_back(what);
    }
}

double now_seconds() {
    using clock = std::chrono::steady_clock;
    static const clock::time_point t0 = clock::now();
    return std::chrono::duration<double>(clock::now() - t0).count();
}

TopologySpec spec_basic(Topology k, int N = 0) {
    TopologySpec s;
    s.kind = k;
    s.N = N;
    return s;
}

TopologySpec spec_pq(Topology k, int p, int q) {
    TopologySpec s;
    s.kind = k;
    s.p = p;
    s.q = q;
    return s;
}

TopologySpec spec_two_branch(int p, int q1, int q2) {
    TopologySpec s;
    s.kind = Topology::ccs_two_branch;
    s.p = p;
    s.q1 = q1;
    s.q2 = q2;
    return s;
}

TopologySpec spec_coupled(int N1, int N2, int N3) {
    TopologySpec s;
    s.kind = Topology::coupled_complete;
    s.N1 = N1;
    s.N2 = N2;
    s.N3 = N3;
    return s;
}

TopologySpec spec_product(std::vector<TopologySpec> factors) {
    TopologySpec s;
    s.kind = Topology::cartesian_product;
    s.factors = std::move(factors);
    return s;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// ── criterion 1: N = 4 golden table ─────────────────────────────────────────

struct GoldenRow {
    const char* name;
    TopologySpec spec;
    std::vector<std::pair<int, double>> weights;  // pinned optimal weights, D = 1
    double lambda2;                               // pinned optimal gap
};

bool criterion1() {
    const double start = now_seconds();
    const double s3 = std::sqrt(3.0);
    const std::vector<GoldenRow> rows = {
        {"path", spec_basic(Topology::path, 4), {{0, 2.0 / 5.0}, {1, 3.0 / 10.0}}, 1.0 / 5.0},
        {"star", spec_basic(Topology::star, 4), {{0, 1.0 / 3.0}}, 1.0 / 3.0},
        {"lollipop", spec_pq(Topology::lollipop, 2, 1),
         {{-1, (2.0 - s3) / 6.0}, {0, 1.0 / 3.0}, {1, 1.0 / 2.0}}, 1.0 - 1.0 / s3},
        {"cycle", spec_basic(Topology::cycle, 4), {{0, 1.0 / 4.0}}, 1.0 / 2.0},
        {"paw", spec_basic(Topology::paw), {{0, 0.0}, {1, 1.0 / 4.0}}, 1.0 / 2.0},
        {"complete", spec_basic(Topology::complete, 4), {{0, 1.0 / 6.0}}, 2.0 / 3.0},
    };
    for (const GoldenRow& row : rows) {
        const WeightedGraph g = build_topology(row.spec);
        const OptimalResult closed = closed_form(row.spec, 1.0);
        const OptimalResult numeric = maximize_gap_numeric(g, 1.0);
        check(std::abs(closed.lambda2 - row.lambda2) <= 1e-12,
              std::string(row.name) + ": closed-form lambda2 " + fmt(closed.lambda2) +
                  " vs pinned " + fmt(row.lambda2) + " (tol 1e-12)");
        check(std::abs(numeric.lambda2 - row.lambda2) <= 1e-5,
              std::string(row.name) + ": numeric lambda2 " + fmt(numeric.lambda2) +
                  " vs pinned " + fmt(row.lambda2) + " (tol 1e-5)");
        for (const auto& [label, w] : row.weights) {
            check(closed.weights_by_orbit.count(label) &&
                      std::abs(closed.weights_by_orbit.at(label) - w) <= 1e-12,
                  std::string(row.name) + ": closed-form weight[" + std::to_string(label) +
                      "] vs pinned " + fmt(w) + " (tol 1e-12)");
            check(numeric.weights_by_orbit.count(label) &&
                      std::abs(numeric.weights_by_orbit.at(label) - w) <= 1e-5,
                  std::string(row.name) + ": numeric weight[" + std::to_string(label) +
                      "] vs pinned " + fmt(w) + " (tol 1e-5)");
        }
        const CertificateReport cert = dual_certificate(g, closed, 1.0);
        check(cert.accepted, std::string(row.name) + ": certificate rejected (violation " +
                                 fmt(cert.max_violation) + ")");
        if (std::string(row.name) == "lollipop") {
            // Document the known discrepancy precisely: the pinned row spends
            // budget B = (9-sqrt(3))/6 ~ 1.211325, and pinned = optimum * B:
            //   (1 - 1/sqrt(3)) = (8-2*sqrt(3))/13 * (9-sqrt(3))/6 exactly,
            // and each pinned weight is the unit-budget optimal weight * B.
            // At D = 1 the pinned weights are infeasible, so the library
            // reports the true unit-budget optimum and this row fails.
            const double B = (9.0 - s3) / 6.0;
            double budget = 0.0;
            for (const auto& [label, w] : row.weights)
                budget += g.orbit_size(label) * w;
            notes.push_back("lollipop: pinned row spends budget " + fmt(budget) + " = B = " +
                            fmt(B) + "; pinned lambda2 (1-1/sqrt(3)) = " + fmt(row.lambda2) +
                            " equals the unit-budget optimum (8-2*sqrt(3))/13 = " +
                            fmt((8.0 - 2.0 * s3) / 13.0) + " times B; library reports the " +
                            "feasible optimum " + fmt(closed.lambda2) +
                            " with weights scaled down by B; row failure is intentional");
        }
    }
    const double elapsed = now_seconds() - start;
    check(elapsed < 5.0, "runtime " + fmt(elapsed) + "s exceeds 5s");
    return checks_failed == 0;
}

// ── criterion 2: complete-core star consistency ──────────────────────────────

bool criterion2() {
    const OptimalResult ccs = closed_form(spec_pq(Topology::ccs_star, 2, 1), 1.0);
    check(std::abs(ccs.lambda2 - 1.0 / 5.0) <= 1e-12,
          "ccs_star(2,1) lambda2 " + fmt(ccs.lambda2) + " vs path-4 value 0.2");
    check(std::abs(ccs.weights_by_orbit.at(0) - 2.0 / 5.0) <= 1e-12,
          "ccs_star(2,1) core weight vs path-4 central weight 0.4");
    check(std::abs(ccs.weights_by_orbit.at(1) - 3.0 / 10.0) <= 1e-12,
          "ccs_star(2,1) branch weight vs path-4 outer weight 0.3");
    for (int q = 1; q <= 5; ++q) {
        const double D = 2.0 * q + 1.0;
        const OptimalResult r = closed_form(spec_pq(Topology::ccs_star, 2, q), D);
        const double expect = 6.0 / ((q + 1.0) * (2.0 * q + 3.0));
        check(std::abs(r.lambda2 - expect) <= 1e-12,
              "even-path gap at q=" + std::to_string(q) + ": " + fmt(r.lambda2) + " vs " +
                  fmt(expect));
    }
    return checks_failed == 0;
}

// ── criterion 3: cartesian equalization ──────────────────────────────────────

bool criterion3() {
    const TopologySpec k2k3 =
        spec_product({spec_basic(Topology::complete, 2), spec_basic(Topology::complete, 3)});
    const OptimalResult closed = closed_form(k2k3, 1.0);
    check(std::abs(closed.lambda2 - 2.0 / 7.0) <= 1e-12,
          "K2xK3 closed lambda2 " + fmt(closed.lambda2) + " vs 2/7");
    check(std::abs(closed.weights_by_orbit.at(1) - 1.0 / 7.0) <= 1e-12,
          "K2xK3 factor-1 weight vs 1/7");
    check(std::abs(closed.weights_by_orbit.at(2) - 2.0 / 21.0) <= 1e-12,
          "K2xK3 factor-2 weight vs 2/21");
    const OptimalResult numeric = maximize_gap_numeric(build_topology(k2k3), 1.0);
    check(std::abs(numeric.lambda2 - 2.0 / 7.0) <= 1e-5,
          "K2xK3 numeric lambda2 " + fmt(numeric.lambda2) + " vs 2/7 (tol 1e-5)");
    check(std::abs(numeric.weights_by_orbit.at(1) - 1.0 / 7.0) <= 1e-5,
          "K2xK3 numeric factor-1 weight (tol 1e-5)");
    check(std::abs(numeric.weights_by_orbit.at(2) - 2.0 / 21.0) <= 1e-5,
          "K2xK3 numeric factor-2 weight (tol 1e-5)");
    for (auto [N1, N2] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
        const double expect = 2.0 / (2.0 * N1 * N2 - N1 - N2);
        const TopologySpec prod = spec_product(
            {spec_basic(Topology::complete, N1), spec_basic(Topology::complete, N2)});
        const OptimalResult num = maximize_gap_numeric(build_topology(prod), 1.0);
        check(std::abs(num.lambda2 - expect) <= 1e-5,
              "K" + std::to_string(N1) + "xK" + std::to_string(N2) + " numeric lambda2 " +
                  fmt(num.lambda2) + " vs formula " + fmt(expect) + " (tol 1e-5)");
    }
    return checks_failed == 0;
}

// ── criterion 4: common gap across the partition lattice ────────────────────

bool criterion4() {
    const double start = now_seconds();
    WeightedGraph path4;
    path4.n_vertices = 4;
    path4.add_edge(0, 1, 1.0, 0);
    path4.add_edge(1, 2, 1.0, 1);
    path4.add_edge(2, 3, 1.0, 2);
    const double expect = 2.0 - std::sqrt(2.0);
    for (const Partition& n :
         {Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}}) {
        const double gap = spectral_gap(induced_graph(path4, n).laplacian_view());
        check(std::abs(gap - expect) <= 1e-9,
              "path-4 " + n.str() + " gap " + fmt(gap) + " vs 2-sqrt(2) (tol 1e-9)");
    }
    WeightedGraph star4;
    star4.n_vertices = 4;
    for (int i = 1; i < 4; ++i) star4.add_edge(0, i, 1.0, 0);
    WeightedGraph cycle4;
    cycle4.n_vertices = 4;
    for (int i = 0; i < 4; ++i) cycle4.add_edge(i, (i + 1) % 4, 1.0, 0);
    for (const auto* g : {&star4, &cycle4}) {
        const AldousReport rep = verify_aldous_extension(*g);
        check(rep.all_equal, "unit-weight graph lattice gaps differ by " +
                                 fmt(rep.max_deviation));
    }
    // 20 seeded random weight vectors, cycled over the three topologies.
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    WeightedGraph* graphs[3] = {&path4, &star4, &cycle4};
    for (int s = 0; s < 20; ++s) {
        WeightedGraph g = *graphs[s % 3];
        for (auto& w : g.weights) w = dist(rng);
        const AldousReport rep = verify_aldous_extension(g);
        check(rep.all_equal, "seed " + std::to_string(s) + ": lattice gaps differ by " +
                                 fmt(rep.max_deviation) + " (tol " + fmt(rep.tolerance) + ")");
        check(rep.max_deviation <= 1e-9,
              "seed " + std::to_string(s) + ": deviation " + fmt(rep.max_deviation) +
                  " above 1e-9");
    }
    const double elapsed = now_seconds() - start;
    check(elapsed < 10.0, "runtime " + fmt(elapsed) + "s exceeds 10s");
    return checks_failed == 0;
}

// ── criterion 5: intertwining and the printed matrices ──────────────────────

bool criterion5() {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> dist(0.1, 2.0);
    for (int trial = 0; trial < 5; ++trial) {
        WeightedGraph path3;
        path3.n_vertices = 3;
        path3.add_edge(0, 1, dist(rng), 0);
        path3.add_edge(1, 2, dist(rng), 1);
        WeightedGraph path4;
        path4.n_vertices = 4;
        path4.add_edge(0, 1, dist(rng), 0);
        path4.add_edge(1, 2, dist(rng), 1);
        path4.add_edge(2, 3, dist(rng), 2);
        WeightedGraph star4;
        star4.n_vertices = 4;
        for (int i = 1; i < 4; ++i) star4.add_edge(0, i, dist(rng), 0);
        for (const auto* g : {&path3, &path4, &star4})
            for (const auto& e : hasse_diagram(g->n_vertices).cover_edges) {
                const double residual = verify_intertwining(*g, e.dominant, e.dominated);
                check(residual <= 1e-12, "intertwining residual " + fmt(residual) + " for " +
                                             e.dominant.str() + " over " + e.dominated.str());
            }
    }
    // Printed 4x6 projection for the row-merge cover on 4 symbols.  Reference
    // rows are ordered by singleton symbol, columns by pair colex; the maps
    // below carry them onto the library's lexicographic tabloid order.
    {
        const int P_ref[4][6] = {{1, 1, 0, 1, 0, 0},
                                 {1, 0, 1, 0, 1, 0},
                                 {0, 1, 1, 0, 0, 1},
                                 {0, 0, 0, 1, 1, 1}};
        const int row_map[4] = {3, 2, 1, 0};
        const int col_map[6] = {5, 4, 2, 3, 1, 0};
        const ProjectionMatrix P = projection_matrix(Partition{3, 1}, Partition{2, 2});
        bool ok = P.entries.rows == 4 && P.entries.cols == 6;
        for (int i = 0; ok && i < 4; ++i)
            for (int j = 0; ok && j < 6; ++j)
                ok = P.entries(row_map[i], col_map[j]) == double(P_ref[i][j]);
        check(ok, "printed 4x6 projection mismatch under the documented permutation");
    }
    // Printed path-4 Laplacians of the cover pair at w = (1,2,3): the
    // dominant layer reproduces the base Laplacian, the dominated layer the
    // printed 6x6 pattern.
    {
        WeightedGraph g;
        g.n_vertices = 4;
        g.add_edge(0, 1, 1.0, 0);
        g.add_edge(1, 2, 2.0, 1);
        g.add_edge(2, 3, 3.0, 2);
        const Mat L31 = induced_graph(g, Partition{3, 1}).laplacian_view();
        const Mat Lbase = laplacian(g);
        const int vmap[4] = {3, 2, 1, 0};
        bool ok = true;
        for (int i = 0; ok && i < 4; ++i)
            for (int j = 0; ok && j < 4; ++j)
                ok = std::abs(L31(vmap[i], vmap[j]) - Lbase(i, j)) <= 1e-15;
        check(ok, "printed 4x4 dominant-layer Laplacian mismatch");
        const double w12 = 1.0, w23 = 2.0, w34 = 3.0;
        const double ssum = w12 + w23 + w34;
        const double ref[6][6] = {{w23, -w23, 0, 0, 0, 0},
                                  {-w23, ssum, -w12, -w34, 0, 0},
                                  {0, -w12, w12 + w34, 0, -w34, 0},
                                  {0, -w34, 0, w12 + w34, -w12, 0},
                                  {0, 0, -w34, -w12, ssum, -w23},
                                  {0, 0, 0, 0, -w23, w23}};
        const int col_map[6] = {5, 4, 2, 3, 1, 0};
        const Mat L22 = induced_graph(g, Partition{2, 2}).laplacian_view();
        ok = true;
        for (int i = 0; ok && i < 6; ++i)
            for (int j = 0; ok && j < 6; ++j)
                ok = std::abs(L22(col_map[i], col_map[j]) - ref[i][j]) <= 1e-15;
        check(ok, "printed 6x6 dominated-layer Laplacian mismatch");
    }
    // Printed 3x6 projection and 6x6 interchange Laplacian on 3 symbols.
    {
        const int P_ref[3][6] = {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
        const int row_map[3] = {2, 1, 0};
        const int col_map[6] = {3, 2, 5, 0, 4, 1};
        const ProjectionMatrix P = projection_matrix(Partition{2, 1}, Partition{1, 1, 1});
        bool ok = P.entries.rows == 3 && P.entries.cols == 6;
        for (int i = 0; ok && i < 3; ++i)
            for (int j = 0; ok && j < 6; ++j)
                ok = P.entries(row_map[i], col_map[j]) == double(P_ref[i][j]);
        check(ok, "printed 3x6 projection mismatch under the documented permutation");
        WeightedGraph g;
        g.n_vertices = 3;
        g.add_edge(0, 1, 1.0, 0);
        g.add_edge(1, 2, 2.0, 1);
        const double w12 = 1.0, w23 = 2.0, dsum = w12 + w23;
        const double ref[6][6] = {{dsum, -w23, -w12, 0, 0, 0},
                                  {-w23, dsum, 0, -w12, 0, 0},
                                  {-w12, 0, dsum, 0, -w23, 0},
                                  {0, -w12, 0, dsum, 0, -w23},
                                  {0, 0, -w23, 0, dsum, -w12},
                                  {0, 0, 0, -w23, -w12, dsum}};
        const Mat L = induced_graph(g, Partition{1, 1, 1}).laplacian_view();
        ok = true;
        for (int i = 0; ok && i < 6; ++i)
            for (int j = 0; ok && j < 6; ++j)
                ok = std::abs(L(col_map[i], col_map[j]) - ref[i][j]) <= 1e-15;
        check(ok, "printed 6x6 interchange Laplacian mismatch");
    }
    return checks_failed == 0;
}

// ── criterion 6: spectrum inclusion across covers, N <= 5 catalog ────────────

bool criterion6() {
    std::vector<std::pair<std::string, TopologySpec>> catalog = {
        {"path_2", spec_basic(Topology::path, 2)},
        {"path_3", spec_basic(Topology::path, 3)},
        {"path_4", spec_basic(Topology::path, 4)},
        {"path_5", spec_basic(Topology::path, 5)},
        {"star_4", spec_basic(Topology::star, 4)},
        {"star_5", spec_basic(Topology::star, 5)},
        {"cycle_3", spec_basic(Topology::cycle, 3)},
        {"cycle_4", spec_basic(Topology::cycle, 4)},
        {"cycle_5", spec_basic(Topology::cycle, 5)},
        {"complete_4", spec_basic(Topology::complete, 4)},
        {"complete_5", spec_basic(Topology::complete, 5)},
        {"paw", spec_basic(Topology::paw)},
        {"lollipop_2_1", spec_pq(Topology::lollipop, 2, 1)},
        {"lollipop_2_2", spec_pq(Topology::lollipop, 2, 2)},
        {"ccs_star_2_1", spec_pq(Topology::ccs_star, 2, 1)},
        {"symmetric_star_2_2", spec_pq(Topology::symmetric_star, 2, 2)},
        {"palm_2_2", spec_pq(Topology::palm, 2, 2)},
        {"palm_3_1", spec_pq(Topology::palm, 3, 1)},
        {"coupled_1_2_1", spec_coupled(1, 2, 1)},
        {"coupled_1_3_1", spec_coupled(1, 3, 1)},
        {"k2xk2", spec_product({spec_basic(Topology::complete, 2),
                                spec_basic(Topology::complete, 2)})},
    };
    for (const auto& [name, spec] : catalog) {
        const WeightedGraph unit = build_topology(spec);
        // Unit weights and (where available) the closed-form optimal weights.
        std::vector<WeightedGraph> variants{unit};
        try {
            variants.push_back(unit.with_orbit_weights(closed_form(spec, 1.0).weights_by_orbit));
        } catch (const unsupported_error&) {
        }
        for (std::size_t v = 0; v < variants.size(); ++v) {
            // Zero-weight optima (the paw chord) can disconnect nothing here:
            // inclusion is checked on whatever the verifier accepts.
            const HasseOrderingReport rep = verify_hasse_ordering(variants[v]);
            for (const auto& pr : rep.pairs)
                check(pr.included, name + (v ? " (optimal weights)" : " (unit weights)") +
                                       ": spectrum of " + pr.dominant.str() +
                                       " not included in " + pr.dominated.str());
        }
    }
    return checks_failed == 0;
}

// ── criterion 7: quantum reduction and convergence on path-3 ────────────────

bool criterion7() {
    const double start = now_seconds();
    WeightedGraph g;
    g.n_vertices = 3;
    g.add_edge(0, 1, 1.0, 0);
    g.add_edge(1, 2, 1.0, 0);
    const double lambda2 = spectral_gap(laplacian(g));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const CMat rho0 = random_density(8, seed);
        const ReductionReport rep = verify_reduction(g, 2, rho0, {0.1, 1.0, 10.0}, 1e-8);
        check(rep.passed, "seed " + std::to_string(seed) + ": reduction deviation " +
                              fmt(rep.max_deviation) + " above 1e-8");
        const double T = 20.0 / lambda2;
        const auto states = qcme_integrate(g, 2, rho0, {T});
        const CMat rho_T = reconstruct_density(states[0]);
        const CMat star = consensus_state(rho0, 2, 3);
        const double dist = frobenius_distance(rho_T, star);
        check(dist <= 1e-6, "seed " + std::to_string(seed) + ": |rho(T)-rho*|_F = " +
                                fmt(dist) + " above 1e-6 at T=20/lambda2");
        const DecayFit fit = decay_slope(g, 2, rho0);
        check(fit.relative_error <= 0.05,
              "seed " + std::to_string(seed) + ": decay slope " + fmt(fit.slope) +
                  " deviates from -lambda2 by " + fmt(fit.relative_error * 100.0) + "%");
    }
    const double elapsed = now_seconds() - start;
    check(elapsed < 30.0, "runtime " + fmt(elapsed) + "s exceeds 30s");
    return checks_failed == 0;
}

// ── criterion 8: decay rate is independent of the local dimension ────────────

bool criterion8() {
    WeightedGraph g;
    g.n_vertices = 3;
    g.add_edge(0, 1, 1.0, 0);
    g.add_edge(1, 2, 1.0, 0);
    const DecayFit fit2 = decay_slope(g, 2, random_density(8, 11));
    const DecayFit fit3 = decay_slope(g, 3, random_density(27, 11));
    check(fit2.relative_error <= 0.05,
          "d=2 slope off by " + fmt(fit2.relative_error * 100.0) + "%");
    check(fit3.relative_error <= 0.05,
          "d=3 slope off by " + fmt(fit3.relative_error * 100.0) + "%");
    const double rel = std::abs(fit2.slope - fit3.slope) / std::abs(fit2.slope);
    check(rel <= 0.05, "d=2 slope " + fmt(fit2.slope) + " vs d=3 slope " + fmt(fit3.slope) +
                           " differ by " + fmt(rel * 100.0) + "%");
    return checks_failed == 0;
}

// ── criterion 9: certificate discrimination ──────────────────────────────────

bool criterion9() {
    const std::vector<std::pair<std::string, TopologySpec>> catalog = {
        {"path_2", spec_basic(Topology::path, 2)},
        {"path_3", spec_basic(Topology::path, 3)},
        {"path_4", spec_basic(Topology::path, 4)},
        {"path_5", spec_basic(Topology::path, 5)},
        {"path_6", spec_basic(Topology::path, 6)},
        {"path_7", spec_basic(Topology::path, 7)},
        {"path_8", spec_basic(Topology::path, 8)},
        {"star_2", spec_basic(Topology::star, 2)},
        {"star_5", spec_basic(Topology::star, 5)},
        {"cycle_3", spec_basic(Topology::cycle, 3)},
        {"cycle_4", spec_basic(Topology::cycle, 4)},
        {"cycle_5", spec_basic(Topology::cycle, 5)},
        {"cycle_6", spec_basic(Topology::cycle, 6)},
        {"complete_2", spec_basic(Topology::complete, 2)},
        {"complete_4", spec_basic(Topology::complete, 4)},
        {"complete_5", spec_basic(Topology::complete, 5)},
        {"paw", spec_basic(Topology::paw)},
        {"lollipop_2_1", spec_pq(Topology::lollipop, 2, 1)},
        {"lollipop_9_2", spec_pq(Topology::lollipop, 9, 2)},
        {"lollipop_2_2", spec_pq(Topology::lollipop, 2, 2)},
        {"lollipop_3_2", spec_pq(Topology::lollipop, 3, 2)},
        {"lollipop_7_3", spec_pq(Topology::lollipop, 7, 3)},
        {"ccs_star_2_1", spec_pq(Topology::ccs_star, 2, 1)},
        {"ccs_star_3_2", spec_pq(Topology::ccs_star, 3, 2)},
        {"ccs_star_5_3", spec_pq(Topology::ccs_star, 5, 3)},
        {"symmetric_star_3_2", spec_pq(Topology::symmetric_star, 3, 2)},
        {"symmetric_star_2_3", spec_pq(Topology::symmetric_star, 2, 3)},
        {"palm_3_1", spec_pq(Topology::palm, 3, 1)},
        {"palm_1_3", spec_pq(Topology::palm, 1, 3)},
        {"palm_2_2", spec_pq(Topology::palm, 2, 2)},
        {"two_branch_2_1_1", spec_two_branch(2, 1, 1)},
        {"two_branch_3_2_1", spec_two_branch(3, 2, 1)},
        {"two_branch_2_2_2", spec_two_branch(2, 2, 2)},
        {"coupled_1_3_1", spec_coupled(1, 3, 1)},
        {"coupled_2_2_2", spec_coupled(2, 2, 2)},
        {"coupled_1_2_1", spec_coupled(1, 2, 1)},
        {"coupled_2_5_2", spec_coupled(2, 5, 2)},
        {"k2xk3", spec_product({spec_basic(Topology::complete, 2),
                                spec_basic(Topology::complete, 3)})},
        {"k2xc4", spec_product({spec_basic(Topology::complete, 2),
                                spec_basic(Topology::cycle, 4)})},
        {"k3xk3", spec_product({spec_basic(Topology::complete, 3),
                                spec_basic(Topology::complete, 3)})},
        {"k2xk2xk2",
         spec_product({spec_basic(Topology::complete, 2), spec_basic(Topology::complete, 2),
                       spec_basic(Topology::complete, 2)})},
    };
    for (const auto& [name, spec] : catalog) {
        const WeightedGraph g = build_topology(spec);
        const OptimalResult r = closed_form(spec, 1.0);
        const CertificateReport cert = dual_certificate(g, r, 1.0);
        check(cert.accepted,
              name + ": certificate rejected the closed-form optimum (violation " +
                  fmt(cert.max_violation) + ")");
    }
    // Uniform weights must be rejected on path-4 and on the 4-vertex lollipop.
    {
        const WeightedGraph g = build_topology(spec_basic(Topology::path, 4));
        OptimalResult uniform;
        uniform.weights_by_orbit = {{0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
        uniform.lambda2 =
            spectral_gap(laplacian(g.with_orbit_weights(uniform.weights_by_orbit)));
        uniform.budget_used = 1.0;
        check(uniform.lambda2 <= 0.98 * 0.2, "uniform path-4 gap not 2% below optimal");
        const CertificateReport cert = dual_certificate(g, uniform, 1.0);
        check(!cert.accepted, "certificate accepted uniform weights on path-4");
    }
    {
        const WeightedGraph g = build_topology(spec_pq(Topology::lollipop, 2, 1));
        OptimalResult uniform;
        uniform.weights_by_orbit = {{-1, 0.25}, {0, 0.25}, {1, 0.25}};
        uniform.lambda2 =
            spectral_gap(laplacian(g.with_orbit_weights(uniform.weights_by_orbit)));
        uniform.budget_used = 1.0;
        check(uniform.lambda2 <= 0.98 * 0.34891526037401893,
              "uniform lollipop gap not 2% below optimal");
        const CertificateReport cert = dual_certificate(g, uniform, 1.0);
        check(!cert.accepted, "certificate accepted uniform weights on the 4-vertex lollipop");
    }
    return checks_failed == 0;
}

// ── criterion 10: zero-weight phenomena in the numeric route ────────────────

bool criterion10() {
    {
        const WeightedGraph g = build_topology(spec_basic(Topology::paw));
        const OptimalResult r = maximize_gap_numeric(g, 1.0);
        check(r.weights_by_orbit.at(0) <= 1e-5,
              "numeric paw chord weight " + fmt(r.weights_by_orbit.at(0)) + " above 1e-5");
    }
    {
        // Tail-heavy lollipop: the core-to-hub structure alone is optimal and
        // the intra-core edge weight vanishes.
        const WeightedGraph g = build_topology(spec_pq(Topology::lollipop, 2, 2));
        const OptimalResult r = maximize_gap_numeric(g, 1.0);
        check(r.weights_by_orbit.at(-1) <= 1e-4,
              "numeric lollipop(2,2) core weight " + fmt(r.weights_by_orbit.at(-1)) +
                  " above 1e-4");
    }
    return checks_failed == 0;
}

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    if (argc > 1) {
        which = std::atoi(argv[1]);
        if (which < 1 || which > 10) {
            std::cerr << "usage: " << argv[0] << " [criterion 1..10]\n";
            return 2;
        }
    }
    bool (*criteria[10])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                              criterion6, criterion7, criterion8, criterion9, criterion10};
    const char* labels[10] = {
        "N=4 golden table (closed, numeric, certificate)",
        "complete-core star vs even path",
        "cartesian equalization rule",
        "common gap across the partition lattice",
        "intertwining and printed matrices",
        "spectrum inclusion across covers",
        "quantum reduction and convergence",
        "decay rate independent of local dimension",
        "certificate discrimination",
        "zero-weight phenomena",
    };
    int failed = 0;
    for (int c = 1; c <= 10; ++c) {
        if (which != 0 && c != which) continue;
        checks_failed = 0;
        notes.clear();
        bool ok = false;
        std::string error;
        try {
            ok = criteria[c - 1]();
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
        }
        std::cout << "criterion " << c << ": " << (ok ? "PASS" : "FAIL") << "  " << labels[c - 1]
                  << "\n";
        if (!error.empty()) std::cout << "    exception: " << error << "\n";
        for (const auto& n : notes) std::cout << "    " << n << "\n";
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
