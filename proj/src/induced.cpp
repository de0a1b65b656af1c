#include "qcons/induced.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace qcons {

namespace {

// Zero-padded part access so covers across unequal row counts compare cleanly.
int part_or_zero(const Partition& n, int i) {
    return i < n.rows() ? n.parts[static_cast<std::size_t>(i)] : 0;
}

// True iff n covers n_prime: strict dominance with no partition of the same
// total strictly between them.
bool is_cover(const Partition& n, const Partition& n_prime) {
    if (n == n_prime || !dominates(n, n_prime)) return false;
    for (const Partition& z : enumerate_partitions(n.total())) {
        if (z == n || z == n_prime) continue;
        if (dominates(n, z) && dominates(z, n_prime)) return false;
    }
    return true;
}

struct BoxMove {
    int m;  // row of n that loses the box (1-based)
    int r;  // row of n′ that gains it (1-based); r = K+1 in category 2
};

// Locate the single moved box of a cover.  Dominance covers always move
// exactly one box; this is asserted rather than assumed.
BoxMove locate_box_move(const Partition& n, const Partition& n_prime) {
    const int rows = std::max(n.rows(), n_prime.rows());
    int m = 0, r = 0, diffs = 0;
    for (int i = 0; i < rows; ++i) {
        const int delta = part_or_zero(n, i) - part_or_zero(n_prime, i);
        if (delta == 0) continue;
        ++diffs;
        if (delta == 1) m = i + 1;
        else if (delta == -1) r = i + 1;
        else diffs = 3;  // a row changed by more than one box
    }
    if (diffs != 2 || m == 0 || r == 0 || m >= r)
        throw std::logic_error("locate_box_move: cover is not a single box move from " +
                               n.str() + " to " + n_prime.str());
    return {m, r};
}

// Row-content sets of a tabloid: rows[k] = symbols (1-based) in row k+1.
std::vector<std::vector<int>> row_contents(const Tabloid& t, int rows) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(rows));
    for (std::size_t i = 0; i < t.yamanouchi.size(); ++i)
        out[static_cast<std::size_t>(t.yamanouchi[i] - 1)].push_back(static_cast<int>(i) + 1);
    return out;
}

}  // namespace

InducedGraph induced_graph(const WeightedGraph& g, const Partition& n) {
    if (n.total() != g.n_vertices)
        throw std::invalid_argument("induced_graph: partition " + n.str() + " totals " +
                                    std::to_string(n.total()) + " but the graph has " +
                                    std::to_string(g.n_vertices) + " vertices");
    InducedGraph ig{n, enumerate_tabloids(n), g, WeightedGraph{}};
    ig.graph.n_vertices = static_cast<int>(ig.vertices.size());

    std::vector<int> word;
    for (std::size_t t = 0; t < ig.vertices.size(); ++t) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const auto [j, l] = g.edges[e];
            word = ig.vertices[t].yamanouchi;
            if (word[static_cast<std::size_t>(j)] == word[static_cast<std::size_t>(l)])
                continue;  // transposition fixes the tabloid; no contribution
            std::swap(word[static_cast<std::size_t>(j)], word[static_cast<std::size_t>(l)]);
            const std::size_t t2 = tabloid_index(n, word);
            if (t < t2)
                ig.graph.add_edge(static_cast<int>(t), static_cast<int>(t2), g.weights[e],
                                  g.orbit_of_edge[e]);
        }
    }
    return ig;
}

ProjectionMatrix projection_matrix(const Partition& n, const Partition& n_prime) {
    if (n.total() != n_prime.total() || !is_cover(n, n_prime))
        throw std::invalid_argument("projection_matrix: " + n.str() + " does not cover " +
                                    n_prime.str());
    const BoxMove mv = locate_box_move(n, n_prime);
    const auto tab_n = enumerate_tabloids(n);
    const auto tab_np = enumerate_tabloids(n_prime);

    ProjectionMatrix P{n, n_prime,
                       Mat(static_cast<int>(tab_n.size()), static_cast<int>(tab_np.size()))};
    // P(a,b) = 1 iff moving one symbol of b from row r to row m yields a:
    // rows other than m and r agree, row m of a gains exactly the symbol that
    // row r of b loses.
    std::vector<int> word;
    for (std::size_t b = 0; b < tab_np.size(); ++b) {
        const auto rows_b = row_contents(tab_np[b], n_prime.rows());
        for (const int x : rows_b[static_cast<std::size_t>(mv.r - 1)]) {
            word = tab_np[b].yamanouchi;
            word[static_cast<std::size_t>(x - 1)] = mv.m;
            const std::size_t a = tabloid_index(n, word);
            P.entries(static_cast<int>(a), static_cast<int>(b)) = 1.0;
        }
    }
    return P;
}

double verify_intertwining(const WeightedGraph& g, const Partition& n,
                           const Partition& n_prime) {
    const ProjectionMatrix P = projection_matrix(n, n_prime);
    const Mat Ln = induced_graph(g, n).laplacian_view();
    const Mat Lnp = induced_graph(g, n_prime).laplacian_view();
    const Mat lhs = matmul_serial(Ln, P.entries);
    const Mat rhs = matmul_serial(P.entries, Lnp);
    double residual = 0.0;
    for (std::size_t i = 0; i < lhs.a.size(); ++i)
        residual = std::max(residual, std::abs(lhs.a[i] - rhs.a[i]));
    return residual;
}

namespace {

// Partition of N given by the value multiplicities of a coefficient tuple.
Partition tuple_partition(const std::vector<int>& tuple) {
    std::map<int, int> mult;
    for (int v : tuple) ++mult[v];
    std::vector<int> parts;
    parts.reserve(mult.size());
    for (const auto& [v, c] : mult) parts.push_back(c);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

// Closed-form component count for a partition with rows n_1 >= ... >= n_K
// over an alphabet of size A = d²: falling factorial A·(A−1)···(A−K+1)
// divided by g! for every group of g equal-length rows (assigning values to
// equal rows in a different order lands in the same component).
std::uint64_t multiplicity_formula(const Partition& n, int alphabet) {
    std::uint64_t count = 1;
    for (int k = 0; k < n.rows(); ++k) count *= static_cast<std::uint64_t>(alphabet - k);
    int run = 1;
    for (int k = 1; k <= n.rows(); ++k) {
        if (k < n.rows() && n.parts[static_cast<std::size_t>(k)] ==
                                n.parts[static_cast<std::size_t>(k - 1)]) {
            ++run;
            continue;
        }
        for (int f = 2; f <= run; ++f) count /= static_cast<std::uint64_t>(f);
        run = 1;
    }
    return count;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

// Ground-truth multiplicities by enumerating all alphabet^N coefficient
// tuples and merging along edge transpositions.
std::map<std::vector<int>, std::uint64_t> multiplicities_brute(const WeightedGraph& g,
                                                               int alphabet) {
    const int N = g.n_vertices;
    std::size_t total = 1;
    for (int i = 0; i < N; ++i) total *= static_cast<std::size_t>(alphabet);

    const auto decode = [&](std::size_t code) {
        std::vector<int> tuple(static_cast<std::size_t>(N));
        for (int i = 0; i < N; ++i) {
            tuple[static_cast<std::size_t>(i)] = static_cast<int>(code % alphabet);
            code /= static_cast<std::size_t>(alphabet);
        }
        return tuple;
    };
    const auto encode = [&](const std::vector<int>& tuple) {
        std::size_t code = 0;
        for (int i = N - 1; i >= 0; --i)
            code = code * static_cast<std::size_t>(alphabet) +
                   static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)]);
        return code;
    };

    UnionFind uf(total);
    for (std::size_t code = 0; code < total; ++code) {
        auto tuple = decode(code);
        for (const auto& [j, l] : g.edges) {
            if (tuple[static_cast<std::size_t>(j)] == tuple[static_cast<std::size_t>(l)])
                continue;
            std::swap(tuple[static_cast<std::size_t>(j)], tuple[static_cast<std::size_t>(l)]);
            uf.unite(static_cast<int>(code), static_cast<int>(encode(tuple)));
            std::swap(tuple[static_cast<std::size_t>(j)], tuple[static_cast<std::size_t>(l)]);
        }
    }

    // One representative per component; classify by value-multiplicity pattern
    // and cross-check the component size against the tabloid count.
    std::map<int, std::uint64_t> comp_size;
    for (std::size_t code = 0; code < total; ++code)
        ++comp_size[uf.find(static_cast<int>(code))];
    std::map<std::vector<int>, std::uint64_t> mult;
    for (const auto& [root, size] : comp_size) {
        const Partition p = tuple_partition(decode(static_cast<std::size_t>(root)));
        if (size != tabloid_count(p))
            throw std::runtime_error(
                "quantum_block_structure: a coefficient component does not match its "
                "partition's tabloid space; is the graph connected?");
        ++mult[p.parts];
    }
    return mult;
}

}  // namespace

std::vector<BlockEntry> quantum_block_structure(const WeightedGraph& g, int d) {
    if (d < 2) throw std::invalid_argument("quantum_block_structure: d >= 2 required");
    const int N = g.n_vertices;
    const int alphabet = d * d;

    // d^{2N} <= 4096 ⇔ N·log(alphabet) <= log 4096
    bool small = true;
    {
        std::uint64_t size = 1;
        for (int i = 0; i < N && small; ++i) {
            size *= static_cast<std::uint64_t>(alphabet);
            if (size > 4096) small = false;
        }
    }

    std::map<std::vector<int>, std::uint64_t> brute;
    if (small) brute = multiplicities_brute(g, alphabet);

    std::vector<BlockEntry> out;
    for (const Partition& n : enumerate_partitions(N)) {
        if (n.rows() > alphabet) continue;
        const std::uint64_t mult =
            small ? brute.at(n.parts) : multiplicity_formula(n, alphabet);
        out.push_back(BlockEntry{n, mult, induced_graph(g, n)});
    }
    return out;
}

}  // namespace qcons
