#pragma once

// Schreier induced graphs of vertex-permutation dynamics.
//
// For a weighted graph g on N vertices and a partition n ⊢ N, the induced
// graph lives on the tabloids of shape n (row assignments of the symbols
// 1..N).  Each base edge {j,l} acts on a tabloid by transposing the rows of
// symbols j+1 and l+1; when the two symbols sit in different rows this
// produces an induced edge of the same weight, and when they share a row the
// tabloid is fixed and the edge contributes nothing.
//
// One-level dominance covers n ⊳ n′ admit a 0/1 projection matrix P that
// intertwines the two induced Laplacians, L_n · P = P · L_{n′}.  Every cover
// moves exactly one box, from row m of n to row r of n′ (category 1 keeps the
// row count, category 2 appends a new singleton row), and P(a,b) = 1 exactly
// when relabeling one row-r symbol of the n′-tabloid b to row m yields the
// n-tabloid a.  Column sums are therefore n′_r (category 1) or exactly one
// (category 2) and row sums are n_m.
//
// The same transposition action decomposes the d²ᴺ-dimensional coefficient
// space of an N-qudit network into connected components: one component per
// assignment of distinct coefficient values to the rows of a partition, each
// component a copy of that partition's induced graph.

#include "qcons/graph.hpp"
#include "qcons/matrix.hpp"
#include "qcons/partition.hpp"

#include <cstdint>
#include <vector>

namespace qcons {

// Induced graph on the tabloids of shape `partition`.  `vertices[i]` is the
// tabloid at graph vertex i, in canonical lexicographic Yamanouchi order.
struct InducedGraph {
    Partition partition;
    std::vector<Tabloid> vertices;
    WeightedGraph base_graph;
    WeightedGraph graph;

    Mat laplacian_view() const { return laplacian(graph); }
};

// Build the induced graph of `n` over `g`.  Requires n ⊢ g.n_vertices.
// For n = (N−1,1) the result is isomorphic to g itself: the tabloid whose
// second-row symbol is i+1 corresponds to base vertex i.
InducedGraph induced_graph(const WeightedGraph& g, const Partition& n);

// 0/1 projection between the tabloid spaces of a one-level dominance cover.
// `entries` is ν×ν′ (rows: tabloids of the dominant n, columns: tabloids of
// the dominated n′), in canonical lexicographic order on both sides.
struct ProjectionMatrix {
    Partition from_partition;  // dominant n
    Partition to_partition;    // dominated n′
    Mat entries;
};

// Requires n to cover n_prime in the dominance order (one-level, either
// category); throws std::invalid_argument naming both partitions otherwise.
ProjectionMatrix projection_matrix(const Partition& n, const Partition& n_prime);

// Max-norm of L_n·P − P·L_{n′} over g's weights; exact cancellation is
// expected, so a residual above ~1e−12·(max weight) indicates a defect.
double verify_intertwining(const WeightedGraph& g, const Partition& n,
                           const Partition& n_prime);

// One block of the coefficient-space decomposition: `multiplicity` identical
// copies of `induced` appear among the connected components of the d²ᴺ
// coefficient indices under the edge-transposition action.
struct BlockEntry {
    Partition partition;
    std::uint64_t multiplicity;
    InducedGraph induced;
};

// Decompose the coefficient space of an N-qudit network on g (connected)
// into partition blocks.  One entry per partition of N with at most d² rows,
// in enumeration order.  Multiplicities come from brute-force component
// enumeration when d²ᴺ ≤ 4096 and from the closed-form count
// (d²)·(d²−1)···(d²−K+1) / ∏(group sizes of equal-length rows)! otherwise.
std::vector<BlockEntry> quantum_block_structure(const WeightedGraph& g, int d);

}  // namespace qcons
