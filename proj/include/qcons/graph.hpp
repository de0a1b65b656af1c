#pragma once
//
// Weighted undirected simple graphs, the topology catalog with
// symmetry-derived edge orbits, Laplacians, Cartesian products, and JSON/DOT
// serialization.
//
// Vertex numbering is 0-based everywhere.  Orbit labels are small integers
// chosen to mirror each topology's weight symbols (w₋₁, w₀, w₁, ... become
// -1, 0, 1, ...).  Documented per builder below.
//
#include "qcons/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qcons {

// ── WeightedGraph ────────────────────────────────────────────────────────────

struct WeightedGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, no duplicates
    std::vector<double> weights;             // >= 0, parallel to edges
    std::vector<int> orbit_of_edge;          // parallel to edges

    // Adds edge {u,v}; normalizes order, rejects self-loops, duplicates,
    // out-of-range vertices, and negative weights.
    void add_edge(int u, int v, double w = 1.0, int orbit = 0);

    std::size_t edge_count() const { return edges.size(); }

    // Sorted distinct orbit labels.
    std::vector<int> orbit_labels() const;

    // Number of edges carrying the label.
    int orbit_size(int label) const;

    // Copy with each edge's weight replaced by its orbit's value.  Throws if a
    // label present in the graph is missing from the map.
    WeightedGraph with_orbit_weights(const std::map<int, double>& w) const;

    bool operator==(const WeightedGraph&) const = default;
};

// L = D − A for the weighted adjacency; row sums exactly zero.
Mat laplacian(const WeightedGraph& g);

// Reachability over all edges (weights ignored).
bool is_connected(const WeightedGraph& g);

// ── Topology catalog ─────────────────────────────────────────────────────────

enum class Topology {
    path,            // N           orbit = distance from path center (0.. for even N, 1.. for odd)
    cycle,           // N           single orbit 0
    star,            // N           single orbit 0 (center = vertex 0)
    complete,        // N           single orbit 0
    paw,             // (none)      C4 0-1-2-3-0 plus chord {1,3}; orbit 0 = chord, 1 = cycle
    lollipop,        // p, q        K_{p+1} core: non-bridge 0..p-1, bridge p, tail p+1..p+q;
                     //             orbit -1 = core-core, 0 = core-bridge, j = j-th tail edge
    ccs_star,        // p, q        complete core 0..p-1 (orbit 0), p branches of q edges (orbit j)
    ccs_two_branch,  // p, q1, q2   core orbit 0; first-branch orbits -1..-q1, second 1..q2
    symmetric_star,  // p, q        center 0, p branches of q edges; orbit j = j-th edge out
    palm,            // p, q        center 0, p leaves (orbit 0), tail of q edges (orbit j)
    coupled_complete,  // N1,N2,N3  complete on {left ∪ shared} and {shared ∪ right};
                       //           orbits -2 left-left, -1 left-shared, 0 shared-shared,
                       //           1 shared-right, 2 right-right (empty orbits omitted)
    cartesian_product,  // factors  fold of cartesian_product(); factor i edges get orbit i+1
};

struct TopologySpec {
    Topology kind = Topology::path;
    int N = 0;                    // path, cycle, star, complete
    int p = 0, q = 0;             // lollipop, ccs_star, symmetric_star, palm
    int q1 = 0, q2 = 0;           // ccs_two_branch
    int N1 = 0, N2 = 0, N3 = 0;   // coupled_complete
    std::vector<TopologySpec> factors;  // cartesian_product

    std::string str() const;  // e.g. "lollipop(p=2,q=1)"
};

// Unit weights, orbits per the conventions above.  Throws
// std::invalid_argument on degenerate parameters (e.g. ccs_star with p < 2).
WeightedGraph build_topology(const TopologySpec& spec);

// Cartesian product: vertices are pairs (a,b) numbered a·|V₂|+b; the Laplacian
// satisfies L = L₁⊗I + I⊗L₂.  Edge orbits: g1 labels kept, g2 labels shifted
// above them.
WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2);

// ── Serialization ────────────────────────────────────────────────────────────

// Schema: {"n_vertices": int, "edges": [[u,v],...], "weights": [...],
//          "orbits": [...]} — documented in README.  Round-trips exactly
// (doubles emitted with shortest-round-trip precision).
std::string to_json(const WeightedGraph& g);
WeightedGraph from_json(const std::string& text);

// Graphviz export; one line per edge, labelled with weight and orbit.
std::string to_dot(const WeightedGraph& g);

}  // namespace qcons
