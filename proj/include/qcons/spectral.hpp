#pragma once

// Symmetric spectra, the algebraic connectivity λ₂, and the two structural
// checks it obeys across the partition lattice of a fixed interaction graph:
//
//   ordering   λ₂(L_{n′}) ≤ λ₂(L_n) whenever n covers n′ — the dominated
//              (finer) partition can only slow consensus down;
//   inclusion  every eigenvalue of L_n is an eigenvalue of L_{n′} for such
//              covers (the projection embeds the coarse dynamics in the
//              fine one);
//   equality   in fact λ₂ agrees across *all* partitions except the trivial
//              single-row one, so the gap of the underlying graph governs
//              every layer at once.

#include "qcons/graph.hpp"
#include "qcons/matrix.hpp"
#include "qcons/partition.hpp"

#include <vector>

namespace qcons {

// Eigenvalues of a symmetric matrix, ascending, with the solver's certified
// accuracy bound (1e−10·‖m‖₂).
struct Spectrum {
    std::vector<double> eigenvalues;
    double tolerance = 0.0;
};

// Full spectrum of a symmetric matrix.  Requires ‖m−mᵀ‖_max ≤ 1e−12·‖m‖_max;
// throws std::invalid_argument otherwise.
Spectrum eigenvalues_sym(const Mat& m);

// Second-smallest eigenvalue of a Laplacian; zero (within tolerance) exactly
// when the graph is disconnected.
double spectral_gap(const Mat& L);

// True iff every entry of `sub` matches a distinct entry of `super` within
// tol (both ascending; greedy two-pointer matching respecting multiplicity).
bool spectrum_included(const std::vector<double>& sub, const std::vector<double>& super,
                       double tol);

// ── Lattice-wide verification reports ────────────────────────────────────────

struct HassePairCheck {
    Partition dominant;
    Partition dominated;
    double gap_dominant = 0.0;   // λ₂(L_n)
    double gap_dominated = 0.0;  // λ₂(L_{n′})
    bool gap_ordered = false;    // gap_dominated ≤ gap_dominant + tol
    bool included = false;       // spec(L_n) ⊆ spec(L_{n′}) within tol
};

struct HasseOrderingReport {
    std::vector<HassePairCheck> pairs;
    double tolerance = 0.0;
    bool all_pass = false;
};

// Check gap ordering and spectrum inclusion over every dominance cover of
// the partitions of N = |V|.  Requires a connected graph (detected
// spectrally: λ₂ ≤ 1e−9·max weighted degree ⇒ std::invalid_argument).
HasseOrderingReport verify_hasse_ordering(const WeightedGraph& g);

struct PartitionGap {
    Partition partition;
    double gap = 0.0;
};

struct AldousReport {
    std::vector<PartitionGap> gaps;  // every partition except the single-row one
    double max_deviation = 0.0;      // spread of the gaps
    double tolerance = 0.0;
    bool all_equal = false;
};

// Verify that λ₂ agrees across all nontrivial partitions of N = |V|.
// Requires a connected graph and N ≤ 7 (tabloid spaces grow factorially);
// larger N throws resource_error.
AldousReport verify_aldous_extension(const WeightedGraph& g);

}  // namespace qcons
