#include "doctest.h"

#include "qcons/errors.hpp"
#include "qcons/graph.hpp"
#include "qcons/kernels.hpp"
#include "qcons/matrix.hpp"
#include "qcons/spectral.hpp"
#include "qcons/weight_opt.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <map>
#include <utility>
#include <vector>

using namespace qcons;

namespace {

TopologySpec spec_basic(Topology k, int N) {
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

struct FrozenCase {
    const char* name;
    TopologySpec spec;
    double lambda2;
    std::vector<std::pair<int, double>> weights;  // orbit label -> weight at D = 1
};

// Values frozen from an independent formula evaluation, each verified against
// an SDP solve of the budgeted λ₂ maximization (deviations < 5e-7) and an
// eigensolve of the resulting Laplacian (deviations < 1e-11).
std::vector<FrozenCase> frozen_catalog() {
    const auto P = [](Topology k, int N) { return spec_basic(k, N); };
    return {
        {"path_2", P(Topology::path, 2), 2.0, {{0, 1.0}}},
        {"path_3", P(Topology::path, 3), 0.5, {{1, 0.5}}},
        {"path_4", P(Topology::path, 4), 0.2, {{0, 0.4}, {1, 0.3}}},
        {"path_5", P(Topology::path, 5), 0.1, {{1, 0.3}, {2, 0.2}}},
        {"path_6", P(Topology::path, 6), 0.05714285714285714,
         {{0, 0.2571428571428571}, {1, 0.22857142857142856}, {2, 0.14285714285714285}}},
        {"path_7", P(Topology::path, 7), 0.03571428571428571,
         {{1, 0.21428571428571427}, {2, 0.17857142857142858}, {3, 0.10714285714285714}}},
        {"path_8", P(Topology::path, 8), 0.023809523809523808,
         {{0, 0.19047619047619047},
          {1, 0.17857142857142858},
          {2, 0.14285714285714285},
          {3, 0.08333333333333333}}},
        {"star_2", P(Topology::star, 2), 2.0, {{0, 1.0}}},
        {"star_5", P(Topology::star, 5), 0.25, {{0, 0.25}}},
        {"cycle_3", P(Topology::cycle, 3), 0.9999999999999999, {{0, 0.3333333333333333}}},
        {"cycle_4", P(Topology::cycle, 4), 0.49999999999999994, {{0, 0.25}}},
        {"cycle_5", P(Topology::cycle, 5), 0.276393202250021, {{0, 0.2}}},
        {"cycle_6", P(Topology::cycle, 6), 0.16666666666666663, {{0, 0.16666666666666666}}},
        {"complete_2", P(Topology::complete, 2), 2.0, {{0, 1.0}}},
        {"complete_4", P(Topology::complete, 4), 0.6666666666666666,
         {{0, 0.16666666666666666}}},
        {"complete_5", P(Topology::complete, 5), 0.5, {{0, 0.1}}},
        {"paw", spec_basic(Topology::paw, 0), 0.5, {{0, 0.0}, {1, 0.25}}},
        {"lollipop_2_1", spec_pq(Topology::lollipop, 2, 1), 0.34891526037401893,
         {{-1, 0.03686723521817768}, {0, 0.27518078993766354}, {1, 0.4127711849064953}}},
        {"lollipop_9_2", spec_pq(Topology::lollipop, 9, 2), 0.07779617764240906,
         {{-1, 0.0035837224435661557},
          {0, 0.04554267565031366},
          {1, 0.28146921490506066},
          {2, 0.17963269627373488}}},
        {"lollipop_2_2", spec_pq(Topology::lollipop, 2, 2), 0.14705882352941177,
         {{-1, 0.0}, {0, 0.1764705882352941}, {1, 0.3823529411764706}, {2, 0.2647058823529412}}},
        {"lollipop_3_2", spec_pq(Topology::lollipop, 3, 2), 0.125,
         {{-1, 0.0}, {0, 0.125}, {1, 0.375}, {2, 0.25}}},
        {"lollipop_7_3", spec_pq(Topology::lollipop, 7, 3), 0.047619047619047616,
         {{-1, 0.0},
          {0, 0.047619047619047616},
          {1, 0.2857142857142857},
          {2, 0.23809523809523808},
          {3, 0.14285714285714285}}},
        {"ccs_star_2_1", spec_pq(Topology::ccs_star, 2, 1), 0.2, {{0, 0.4}, {1, 0.3}}},
        {"ccs_star_3_2", spec_pq(Topology::ccs_star, 3, 2), 0.03522081090086452,
         {{0, 0.09622504486493763}, {1, 0.14633192201197562}, {2, 0.09077636645642008}}},
        {"ccs_star_5_3", spec_pq(Topology::ccs_star, 5, 3), 0.008624605529280674,
         {{0, 0.02326372285922991},
          {1, 0.06811167161148943},
          {2, 0.05403238660360696},
          {3, 0.03132849606644381}}},
        {"symmetric_star_3_2", spec_pq(Topology::symmetric_star, 3, 2), 0.06666666666666667,
         {{1, 0.2}, {2, 0.13333333333333333}}},
        {"symmetric_star_2_3", spec_pq(Topology::symmetric_star, 2, 3), 0.03571428571428571,
         {{1, 0.21428571428571427}, {2, 0.17857142857142858}, {3, 0.10714285714285714}}},
        {"palm_3_1", spec_pq(Topology::palm, 3, 1), 0.25, {{0, 0.25}, {1, 0.25}}},
        {"palm_1_3", spec_pq(Topology::palm, 1, 3), 0.1,
         {{0, 0.2}, {1, 0.30000000000000004}, {2, 0.3}, {3, 0.2}}},
        {"palm_2_2", spec_pq(Topology::palm, 2, 2), 0.14705882352941177,
         {{0, 0.1764705882352941}, {1, 0.3823529411764706}, {2, 0.2647058823529412}}},
        {"two_branch_2_1_1", spec_two_branch(2, 1, 1), 0.10526315789473684,
         {{-1, 0.15789473684210525}, {0, 0.368421052631579}, {1, 0.15789473684210525}}},
        {"two_branch_3_2_1", spec_two_branch(3, 2, 1), 0.027889018970715693,
         {{-2, 0.07187977055160867},
          {-1, 0.11587052213250164},
          {0, 0.10159228906833007},
          {1, 0.043990751580892974}}},
        {"two_branch_2_2_2", spec_two_branch(2, 2, 2), 0.028985507246376812,
         {{-2, 0.07246376811594203},
          {-1, 0.11594202898550725},
          {0, 0.2463768115942029},
          {1, 0.11594202898550725},
          {2, 0.07246376811594203}}},
        {"coupled_1_3_1", spec_coupled(1, 3, 1), 0.42857142857142855,
         {{-1, 0.14285714285714285}, {0, 0.047619047619047616}, {1, 0.14285714285714285}}},
        {"coupled_2_2_2", spec_coupled(2, 2, 2), 0.25,
         {{-2, 0.0}, {-1, 0.125}, {0, 0.0}, {1, 0.125}, {2, 0.0}}},
        {"coupled_1_2_1", spec_coupled(1, 2, 1), 0.5, {{-1, 0.25}, {0, 0.0}, {1, 0.25}}},
        {"coupled_2_5_2", spec_coupled(2, 5, 2), 0.22727272727272727,
         {{-2, 0.0},
          {-1, 0.045454545454545456},
          {0, 0.00909090909090909},
          {1, 0.045454545454545456},
          {2, 0.0}}},
        {"k2xk3",
         spec_product({spec_basic(Topology::complete, 2), spec_basic(Topology::complete, 3)}),
         0.2857142857142857, {{1, 0.14285714285714285}, {2, 0.09523809523809523}}},
        {"k2xc4",
         spec_product({spec_basic(Topology::complete, 2), spec_basic(Topology::cycle, 4)}),
         0.16666666666666663, {{1, 0.08333333333333331}, {2, 0.08333333333333333}}},
        {"k3xk3",
         spec_product({spec_basic(Topology::complete, 3), spec_basic(Topology::complete, 3)}),
         0.16666666666666666, {{1, 0.05555555555555555}, {2, 0.05555555555555555}}},
        {"k2xk2xk2",
         spec_product({spec_basic(Topology::complete, 2), spec_basic(Topology::complete, 2),
                       spec_basic(Topology::complete, 2)}),
         0.16666666666666666,
         {{1, 0.08333333333333333}, {2, 0.08333333333333333}, {3, 0.08333333333333333}}},
    };
}

}  // namespace

TEST_CASE("closed forms reproduce the frozen catalog at D = 1") {
    for (const FrozenCase& fc : frozen_catalog()) {
        CAPTURE(fc.name);
        const OptimalResult r = closed_form(fc.spec, 1.0);
        CHECK(std::abs(r.lambda2 - fc.lambda2) <= 1e-12);
        REQUIRE(r.weights_by_orbit.size() == fc.weights.size());
        for (const auto& [label, w] : fc.weights) {
            REQUIRE(r.weights_by_orbit.count(label) == 1);
            CHECK(std::abs(r.weights_by_orbit.at(label) - w) <= 1e-12);
        }
        CHECK(std::abs(r.budget_used - 1.0) <= 1e-10);
        CHECK(r.converged);
    }
}

TEST_CASE("closed-form lambda2 equals the spectral gap of the weighted graph") {
    for (const FrozenCase& fc : frozen_catalog()) {
        CAPTURE(fc.name);
        const WeightedGraph g = build_topology(fc.spec);
        const OptimalResult r = closed_form(fc.spec, 1.0);
        const double gap = spectral_gap(laplacian(g.with_orbit_weights(r.weights_by_orbit)));
        CHECK(std::abs(gap - r.lambda2) <= 1e-10);
    }
}

TEST_CASE("closed forms scale linearly in the budget") {
    const double D = 2.5;
    for (const FrozenCase& fc : frozen_catalog()) {
        CAPTURE(fc.name);
        const OptimalResult r = closed_form(fc.spec, D);
        CHECK(std::abs(r.lambda2 - D * fc.lambda2) <= 1e-12 * D);
        for (const auto& [label, w] : fc.weights)
            CHECK(std::abs(r.weights_by_orbit.at(label) - D * w) <= 1e-12 * D);
        CHECK(std::abs(r.budget_used - D) <= 1e-10 * D);
    }
}

TEST_CASE("fiedler substitution: even-path gap from the two-branch core") {
    // ccs_star with p = 2 is the even path; at D = 2q+1 its gap must be
    // 6/((q+1)(2q+3)).
    for (int q = 1; q <= 5; ++q) {
        const double D = 2.0 * q + 1.0;
        const OptimalResult r = closed_form(spec_pq(Topology::ccs_star, 2, q), D);
        CHECK(std::abs(r.lambda2 - 6.0 / ((q + 1.0) * (2.0 * q + 3.0))) <= 1e-12);
    }
}

TEST_CASE("gram matrices invert in closed form") {
    for (int q = 1; q <= 6; ++q) {
        const Mat G = gram_ccs(q);
        const Mat Gi = gram_inverse_ccs(q);
        const Mat I = matmul_serial(G, Gi);
        for (int i = 0; i <= q; ++i)
            for (int j = 0; j <= q; ++j)
                CHECK(std::abs(I(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
    for (auto [q1, q2] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 3}}) {
        const Mat G = gram_two_branch(q1, q2);
        const Mat Gi = gram_two_branch_inverse(q1, q2);
        const Mat I = matmul_serial(G, Gi);
        const int n = q1 + q2 + 1;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(std::abs(I(i, j) - (i == j ? 1.0 : 0.0)) <= 1e-12);
    }
}

TEST_CASE("equalization rule on two complete factors matches the printed formula") {
    for (auto [N1, N2] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 5}}) {
        const OptimalResult r = lp_cartesian(
            {spec_basic(Topology::complete, N1), spec_basic(Topology::complete, N2)}, 1.0);
        const double expect = 2.0 / (2.0 * N1 * N2 - N1 - N2);
        CHECK(std::abs(r.lambda2 - expect) <= 1e-12);
        // Factor couplings w_i·λ_{i,2} equalize at s = λ₂.
        CHECK(std::abs(r.weights_by_orbit.at(1) * N1 - r.lambda2) <= 1e-12);
        CHECK(std::abs(r.weights_by_orbit.at(2) * N2 - r.lambda2) <= 1e-12);
    }
}

TEST_CASE("numeric maximizer agrees with closed forms") {
    for (const char* name : {"path_4", "paw", "cycle_5", "star_5", "k2xk3"}) {
        for (const FrozenCase& fc : frozen_catalog()) {
            if (std::string(fc.name) != name) continue;
            CAPTURE(fc.name);
            const WeightedGraph g = build_topology(fc.spec);
            const OptimalResult r = maximize_gap_numeric(g, 1.0);
            CHECK(std::abs(r.lambda2 - fc.lambda2) <= 1e-5);
            for (const auto& [label, w] : fc.weights)
                CHECK(std::abs(r.weights_by_orbit.at(label) - w) <= 1e-5);
            CHECK(std::abs(r.budget_used - 1.0) <= 1e-9);
        }
    }
}

TEST_CASE("numeric maximizer is deterministic") {
    const WeightedGraph g = build_topology(spec_basic(Topology::paw, 0));
    const OptimalResult a = maximize_gap_numeric(g, 1.0);
    const OptimalResult b = maximize_gap_numeric(g, 1.0);
    CHECK(a.lambda2 == b.lambda2);  // bitwise
    for (const auto& [label, w] : a.weights_by_orbit)
        CHECK(w == b.weights_by_orbit.at(label));
    // The chord carries no weight at the optimum.
    CHECK(a.weights_by_orbit.at(0) <= 1e-5);
}

#ifdef _OPENMP
TEST_CASE("numeric maximizer result is independent of the thread count") {
    const WeightedGraph g = build_topology(spec_pq(Topology::lollipop, 2, 1));
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const OptimalResult one = maximize_gap_numeric(g, 1.0);
    omp_set_num_threads(4);
    const OptimalResult four = maximize_gap_numeric(g, 1.0);
    omp_set_num_threads(saved);
    CHECK(one.lambda2 == four.lambda2);  // bitwise
    for (const auto& [label, w] : one.weights_by_orbit)
        CHECK(w == four.weights_by_orbit.at(label));
}
#endif

TEST_CASE("certificate accepts optima and rejects uniform weights") {
    // Accept: a handful of catalog optima of different regimes.
    for (const char* name : {"path_4", "paw", "two_branch_2_1_1", "lollipop_2_1", "k2xk3"}) {
        for (const FrozenCase& fc : frozen_catalog()) {
            if (std::string(fc.name) != name) continue;
            CAPTURE(fc.name);
            const WeightedGraph g = build_topology(fc.spec);
            const OptimalResult r = closed_form(fc.spec, 1.0);
            const CertificateReport cert = dual_certificate(g, r, 1.0);
            CHECK(cert.accepted);
            CHECK(cert.eigenspace_dim >= 1);
        }
    }
    // Reject: uniform weights on path-4 (λ₂ = (2-√2)/3 ≈ 0.195 < 0.2).
    const WeightedGraph p4 = build_topology(spec_basic(Topology::path, 4));
    OptimalResult uniform;
    uniform.weights_by_orbit = {{0, 1.0 / 3.0}, {1, 1.0 / 3.0}};
    uniform.lambda2 = (2.0 - std::sqrt(2.0)) / 3.0;
    uniform.budget_used = 1.0;
    const CertificateReport cert = dual_certificate(p4, uniform, 1.0);
    CHECK_FALSE(cert.accepted);
    CHECK(cert.max_violation > 1e-3);
}

TEST_CASE("unsupported and invalid optimization requests") {
    CHECK_THROWS_AS(closed_form(spec_basic(Topology::path, 4), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(closed_form(spec_basic(Topology::path, 4), -1.0), std::invalid_argument);
    // Asymmetric coupled blocks have no closed form here.
    CHECK_THROWS_AS(closed_form(spec_coupled(1, 2, 2), 1.0), unsupported_error);
    // Cartesian products demand complete/cycle factors.
    CHECK_THROWS_AS(
        lp_cartesian({spec_basic(Topology::path, 3), spec_basic(Topology::complete, 2)}, 1.0),
        unsupported_error);
    // Numeric route requires a connected graph.
    WeightedGraph disc;
    disc.n_vertices = 4;
    disc.add_edge(0, 1, 1.0, 0);
    disc.add_edge(2, 3, 1.0, 1);
    CHECK_THROWS_AS(maximize_gap_numeric(disc, 1.0), std::invalid_argument);
}

TEST_CASE("method names are stable") {
    CHECK(method_name(OptMethod::closed_form) == "closed_form");
    CHECK(method_name(OptMethod::lp_equalization) == "lp_equalization");
    CHECK(method_name(OptMethod::numeric) == "numeric");
}
