#pragma once
//
// Continuous-time consensus dynamics of an N-qudit network in the generalized
// Gell-Mann coefficient picture.
//
// Each site carries a qudit of dimension d.  The local operator basis is the
// d² generalized Gell-Mann matrices Λ₀..Λ_{d²−1} with Λ₀ = √(2/d)·I and
// Tr(Λ_μ Λ_ν) = 2δ_{μν}.  A density matrix on N sites is encoded by the real
// coefficient vector
//
//     x_μ⃗ = (d/2)^{N/2} · Tr(ρ · Λ_{μ₁}⊗···⊗Λ_{μ_N}),
//     ρ   = (2d)^{−N/2} · Σ_μ⃗ x_μ⃗ · Λ_{μ₁}⊗···⊗Λ_{μ_N},
//
// so the maximally mixed state has x_{0⃗} = 1 and trace preservation reads
// x_{0⃗}(t) = 1 for all t.
//
// The master equation dρ/dt = Σ_e w_e (S_e ρ S_e − ρ), with S_e the swap of
// the qudits joined by edge e, becomes a LINEAR flow on coefficients:
// dx/dt = −L_Q x, where L_Q = Σ_e w_e (I − P_e) is the graph Laplacian of the
// Schreier graph on index tuples μ⃗ ∈ {0..d²−1}^N under edge transpositions.
// Restricted to tuples with a fixed multiset of indices, that Schreier graph
// is exactly the tabloid graph produced by induced_graph() — verified
// component by component in verify_reduction().
//
// Scale guards: these routines hold dense d^{2N}-dimensional operators and
// are deliberately capped at desk scale (d^N ≤ 64, and N ≤ 4 for the
// reduction check; the permutation average needs N ≤ 5).  Exceeding a cap
// throws resource_error, never silently degrades.
//
#include "qcons/graph.hpp"
#include "qcons/matrix.hpp"
#include "qcons/partition.hpp"

#include <cstdint>
#include <vector>

namespace qcons {

// ── Operator basis ───────────────────────────────────────────────────────────

// Indexing for one site (j, k are 1-based, 1 ≤ k < j ≤ d):
//   0           √(2/d)·I
//   (j−1)²+2(k−1)   symmetric pair      E_{kj} + E_{jk}
//   (j−1)²+2k−1     antisymmetric pair  −i·E_{kj} + i·E_{jk}
//   j²−1            diagonal            √(2/(j(j−1)))·diag(1,…,1,−(j−1),0,…)
// For d = 2 this is (I, σx, σy, σz).
struct GellMannBasis {
    int d = 2;
    std::vector<CMat> matrices;  // d² Hermitian d×d matrices, Tr(Λ_μ Λ_ν) = 2δ_{μν}
};

GellMannBasis gell_mann_basis(int d);

// d^N × d^N unitary swapping sites a and b (0-based).  Throws on a == b or
// out-of-range sites.
CMat swap_operator(int d, int N, int site_a, int site_b);

// ── Coefficient encoding ─────────────────────────────────────────────────────

struct CoefficientState {
    int d = 2, N = 1;
    std::vector<double> x;  // length d^{2N}; site 0 is the most significant digit

    std::size_t size() const { return x.size(); }
};

// Requires ρ Hermitian with unit trace (1e−10 relative); d^N ≤ 64.
CoefficientState expand_density(const CMat& rho, int d, int N);

// Inverse of expand_density; exact round trip up to floating rounding.
CMat reconstruct_density(const CoefficientState& s);

// ‖A − B‖_F.
double frobenius_distance(const CMat& A, const CMat& B);

// Seeded random full-rank density matrix: G·G†/Tr(G·G†) with complex normal G.
CMat random_density(int dim, std::uint64_t seed);

// Permutation average (1/N!)·Σ_π U_π ρ U_π† — the fixed point the consensus
// dynamics converge to.  Throws resource_error for N > 5.
CMat consensus_state(const CMat& rho, int d, int N);

// ── Dynamics ─────────────────────────────────────────────────────────────────

// L_Q = Σ_e w_e (I − P_e) on index tuples; real symmetric, size d^{2N}.
// Throws resource_error when d^N > 64.
Mat qcme_generator(const WeightedGraph& g, int d);

// ρ(t) for each requested time, as coefficient vectors, via one dense
// eigendecomposition of L_Q.
std::vector<CoefficientState> qcme_integrate(const WeightedGraph& g, int d,
                                             const CMat& rho0,
                                             const std::vector<double>& times);

// Classical consensus x(t) = e^{−L t}·x0 on an arbitrary weighted graph.
std::vector<std::vector<double>> ctc_integrate(const WeightedGraph& g,
                                               const std::vector<double>& x0,
                                               const std::vector<double>& times);

// ── Quantum → classical reduction check ──────────────────────────────────────

struct ReductionBlock {
    Partition partition;        // multiplicity pattern of the tuple component
    std::uint64_t components;   // Schreier components carrying this pattern
    double max_deviation;       // worst |quantum − classical| over the block
};

struct ReductionReport {
    std::vector<ReductionBlock> blocks;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

// Splits the tuple space into Schreier components, maps each onto the tabloid
// graph of its multiplicity pattern (rows assigned by multiplicity desc, then
// index value asc), and compares the full quantum trajectory against the
// classical trajectory on the corresponding induced graph at every requested
// time.  Throws resource_error for N > 4 or d^N > 64.
ReductionReport verify_reduction(const WeightedGraph& g, int d, const CMat& rho0,
                                 const std::vector<double>& times, double tolerance);

// ── Convergence-rate fit ─────────────────────────────────────────────────────

struct DecayFit {
    double lambda2 = 0.0;         // spectral gap of the weighted base graph
    double slope = 0.0;           // fitted d/dt ln‖ρ(t) − ρ*‖_F
    double relative_error = 0.0;  // |slope + λ₂| / λ₂
    std::vector<double> times;
    std::vector<double> distances;
};

// Samples ‖ρ(t) − ρ*‖_F on t ∈ [2/λ₂, 6/λ₂] and fits the log-linear decay
// rate, which the theory predicts equals −λ₂ of the base graph.
DecayFit decay_slope(const WeightedGraph& g, int d, const CMat& rho0,
                     int samples = 9);

}  // namespace qcons
