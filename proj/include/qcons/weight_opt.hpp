#pragma once

// Fastest-consensus weight optimization: maximize the algebraic connectivity
// λ₂ of L(w) over per-orbit edge weights subject to the total budget
//     Σ_edges w_e = D,   w ≥ 0.
//
// Three independent routes are provided and cross-checked in tests:
//   closed_form   exact optima for the symmetric topology catalog,
//   lp_cartesian  the equalization rule w_i = s/λ_{i,2} for Cartesian
//                 products of edge-transitive factors,
//   maximize_gap_numeric
//                 first-order concave maximization (projected supergradient
//                 ascent with multi-start, polished by budget-transfer
//                 coordinate search).
// dual_certificate verifies a claimed optimum via complementary slackness:
// a unit-trace PSD matrix Z supported on the λ₂-eigenspace must make the
// per-edge sensitivity g_e = Z_ii + Z_jj − 2Z_ij equal to λ₂/D on every
// positive-weight edge and no larger on zero-weight edges.

#include "qcons/graph.hpp"
#include "qcons/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcons {

enum class OptMethod { closed_form, lp_equalization, numeric };
std::string method_name(OptMethod m);

// Outcome of the complementary-slackness check.
struct CertificateReport {
    bool accepted = false;
    double max_violation = 0.0;  // worst deviation from the slackness conditions
    double common_value = 0.0;   // the per-edge dual value λ₂/D
    int eigenspace_dim = 0;      // size of the λ₂ eigenvalue cluster
    int iterations = 0;          // projection iterations spent
};

struct OptimalResult {
    std::map<int, double> weights_by_orbit;  // orbit label → weight (≥ 0)
    double lambda2 = 0.0;                    // optimal algebraic connectivity
    double budget_used = 0.0;                // Σ orbit size × weight (= D)
    OptMethod method = OptMethod::closed_form;
    bool converged = true;  // numeric route may flag a best-so-far answer
    std::optional<CertificateReport> certificate;
};

// Exact optimum for a catalog topology.  Throws unsupported_error for
// topologies without a closed form (nonsymmetric coupled-complete graphs,
// Cartesian products with a non-edge-transitive factor) — fall back to
// maximize_gap_numeric in that case.  D must be positive.
OptimalResult closed_form(const TopologySpec& spec, double D);

// Equalization optimum for a Cartesian product of edge-transitive factors
// (complete graphs and cycles): w_i = s/λ_{i,2} with s chosen to spend D,
// giving λ₂ = s.  Throws unsupported_error on any other factor kind.
OptimalResult lp_cartesian(const std::vector<TopologySpec>& factors, double D);

// Numeric λ₂ maximization over the orbit-weight simplex.  Requires a
// connected graph with at most 8 edge orbits.  Runs multi-start projected
// supergradient ascent (λ₂ is concave in w; the supergradient is built from
// the λ₂-eigenvector cluster) followed by a budget-transfer pattern search;
// starts run concurrently with fixed per-start seeds and a deterministic
// merge.  If the evaluation cap is reached before the search settles, the
// best point found is returned with converged = false.
OptimalResult maximize_gap_numeric(const WeightedGraph& g, double D);

// Verify optimality of `result` on g by constructing the slackness
// certificate over the λ₂-eigenspace (alternating projections between the
// affine slackness constraints and the PSD cone).  Accepts iff the worst
// violation is within 1e−6 (scaled).  Throws certificate_unavailable_error
// if the eigenspace is numerically empty.
CertificateReport dual_certificate(const WeightedGraph& g, const OptimalResult& result,
                                   double D);

// ── Gram machinery for the complete-core star topologies ────────────────────
//
// The branch-difference vectors of a complete-core star have the Gram matrix
// G below (unit diagonal, −1/√2 coupling between the core row 0 and the
// first branch row, −1/2 between consecutive branch rows); its inverse has
// the closed form implemented here.  The two-branch variant additionally
// couples the two innermost branch rows with +1/2, and its inverse is
// block-structured: rows are indexed −q1..0..q2 and cross-branch entries of
// the inverse vanish.

// (q+1)×(q+1) single-branch Gram matrix, rows 0..q.  Requires q ≥ 1.
Mat gram_ccs(int q);

// Closed-form inverse of gram_ccs(q): (0,0) = q+1, (0,j) = √2(q−j+1),
// (i,j) = 2·min(q−i+1, q−j+1).  Requires q ≥ 1.
Mat gram_inverse_ccs(int q);

// (q1+q2+1)-dimensional two-branch Gram matrix, rows −q1..q2 stored at
// offset +q1.  Requires q1, q2 ≥ 1.
Mat gram_two_branch(int q1, int q2);

// Closed-form inverse of gram_two_branch: (0,0) = q1+q2+1,
// (0,j) = √2(q_b−|j|+1), same-branch (i,j) = 2·min(q_b−|i|+1, q_b−|j|+1),
// cross-branch entries 0, where q_b is the branch length of the row.
Mat gram_two_branch_inverse(int q1, int q2);

}  // namespace qcons
