#pragma once
//
// Integer partitions, dominance (majorization) order, the Hasse diagram of
// covering relations, and Young tabloids encoded as Yamanouchi words.
//
// A partition n = (n_1 >= n_2 >= ... >= n_K), n_i >= 1, Σ n_i = N.  A tabloid
// of shape n is a row-equivalence class of fillings of the Young diagram; it
// is encoded by its Yamanouchi word r = (r_1, ..., r_N) where r_i in {1..K}
// is the row containing element i.  The number of tabloids is the multinomial
//     ν(n) = N! / (n_1! n_2! ... n_K!).
//
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qcons {

// ── Partition ────────────────────────────────────────────────────────────────

struct Partition {
    // Non-increasing positive parts; empty is invalid.
    std::vector<int> parts;

    explicit Partition(std::vector<int> p);
    Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

    int total() const;                 // N = Σ parts
    int rows() const { return static_cast<int>(parts.size()); }  // K

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;  // lexicographic

    std::string str() const;           // "(3,1)"
};

// All partitions of N, each exactly once, in reverse-lexicographic order
// (e.g. N=4: (4),(3,1),(2,2),(2,1,1),(1,1,1,1)).  Throws on N < 1.
std::vector<Partition> enumerate_partitions(int N);

// True iff a majorizes b: Σ_{i<=k} a_i >= Σ_{i<=k} b_i for every k, with the
// shorter part list implicitly zero-padded.  Throws if totals differ.
bool dominates(const Partition& a, const Partition& b);

// ── Hasse diagram ────────────────────────────────────────────────────────────
//
// Covering relations of the dominance order.  Every cover moves exactly one
// box from a row m to either an existing lower row (category 1) or to a new
// bottom row of length 1 (category 2).

struct HasseEdge {
    Partition dominant;
    Partition dominated;
    int category = 0;  // 1: box moved to an existing row, 2: box starts a new row
};

struct HasseDiagram {
    std::vector<Partition> nodes;   // enumerate_partitions order
    std::vector<HasseEdge> cover_edges;
};

// Builds the Hasse diagram for all partitions of N.  Throws on N < 2 (a single
// partition carries no dominance structure).
HasseDiagram hasse_diagram(int N);

// ── Tabloids ─────────────────────────────────────────────────────────────────

struct Tabloid {
    Partition shape;
    std::vector<int> yamanouchi;  // r_1..r_N, each in 1..K, row i used parts[i-1] times

    bool operator==(const Tabloid&) const = default;
};

// Number of tabloids ν(n) = N!/Π n_i! (exact in 64 bits for N <= 20).
std::uint64_t tabloid_count(const Partition& n);

// All tabloids of shape n, in lexicographic order of their Yamanouchi words.
// Index 0 is the sorted word (1,..,1,2,..,2,...).
std::vector<Tabloid> enumerate_tabloids(const Partition& n);

// Position of a Yamanouchi word in the lexicographic enumeration above,
// computed by ranking (no list needed).  The word must be valid for n.
std::size_t tabloid_index(const Partition& n, const std::vector<int>& word);

}  // namespace qcons
