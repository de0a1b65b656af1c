#include "qcons/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcons {

// ── Partition ────────────────────────────────────────────────────────────────

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty())
        throw std::invalid_argument("Partition: at least one part required");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

// ── Enumeration ──────────────────────────────────────────────────────────────

namespace {

// Appends, in reverse-lexicographic order, every partition of `remaining`
// whose parts are bounded by `max_part`, each prefixed by `prefix`.
void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int N) {
    if (N < 1)
        throw std::invalid_argument("enumerate_partitions: N must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(N, N, prefix, out);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.total() != b.total())
        throw std::invalid_argument("dominates: partitions of different totals");
    const std::size_t k = std::max(a.parts.size(), b.parts.size());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < k; ++i) {
        sa += i < a.parts.size() ? a.parts[i] : 0;
        sb += i < b.parts.size() ? b.parts[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

// ── Hasse diagram ────────────────────────────────────────────────────────────

HasseDiagram hasse_diagram(int N) {
    if (N < 2)
        throw std::invalid_argument("hasse_diagram: N must be >= 2");
    HasseDiagram h;
    h.nodes = enumerate_partitions(N);
    const auto& ps = h.nodes;

    // Cover test by exhaustion: a covers b iff a > b in dominance and no c
    // lies strictly between.  Partition counts at desk scale (p(8)=22) make
    // the cubic scan immaterial.
    auto strictly_dominates = [](const Partition& x, const Partition& y) {
        return x != y && dominates(x, y);
    };
    for (const auto& a : ps) {
        for (const auto& b : ps) {
            if (!strictly_dominates(a, b)) continue;
            bool is_cover = true;
            for (const auto& c : ps) {
                if (c == a || c == b) continue;
                if (strictly_dominates(a, c) && strictly_dominates(c, b)) {
                    is_cover = false;
                    break;
                }
            }
            if (!is_cover) continue;
            // Every cover moves a single box; the category is read off the
            // number of rows: a new bottom row appears exactly in category 2.
            const int category = b.rows() == a.rows() + 1 ? 2 : 1;
            h.cover_edges.push_back({a, b, category});
        }
    }
    return h;
}

// ── Tabloids ─────────────────────────────────────────────────────────────────

std::uint64_t tabloid_count(const Partition& n) {
    // Multiply N!/Π n_i! incrementally as a product of binomials so every
    // intermediate value is an exact integer.
    std::uint64_t count = 1;
    int placed = 0;
    for (int part : n.parts) {
        for (int j = 1; j <= part; ++j) {
            count = count * static_cast<std::uint64_t>(placed + j) /
                    static_cast<std::uint64_t>(j);
        }
        placed += part;
    }
    return count;
}

std::vector<Tabloid> enumerate_tabloids(const Partition& n) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n.total()));
    for (int row = 1; row <= n.rows(); ++row)
        word.insert(word.end(), static_cast<std::size_t>(n.parts[row - 1]), row);

    std::vector<Tabloid> out;
    out.reserve(tabloid_count(n));
    do {
        out.push_back({n, word});
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::size_t tabloid_index(const Partition& n, const std::vector<int>& word) {
    if (word.size() != static_cast<std::size_t>(n.total()))
        throw std::invalid_argument("tabloid_index: word length != N");
    // Rank of `word` among all multiset permutations in lexicographic order:
    // at each position, count the permutations that start with a smaller
    // symbol, i.e. remaining_count(s) / remaining_total * ν(remaining) for
    // each symbol s < word[i] still available.
    std::vector<int> remaining(static_cast<std::size_t>(n.rows()) + 1, 0);
    for (int row = 1; row <= n.rows(); ++row)
        remaining[static_cast<std::size_t>(row)] = n.parts[row - 1];

    // ν of the remaining multiset, updated incrementally.
    int total = n.total();
    std::uint64_t nu = tabloid_count(n);
    std::size_t rank = 0;
    for (int r_i : word) {
        if (r_i < 1 || r_i > n.rows() || remaining[static_cast<std::size_t>(r_i)] == 0)
            throw std::invalid_argument("tabloid_index: word is not a valid Yamanouchi word");
        for (int s = 1; s < r_i; ++s) {
            if (remaining[static_cast<std::size_t>(s)] > 0)
                rank += nu * static_cast<std::uint64_t>(remaining[static_cast<std::size_t>(s)]) /
                        static_cast<std::uint64_t>(total);
        }
        // Consume word[i]: ν_rest = ν * remaining[r_i] / total.
        nu = nu * static_cast<std::uint64_t>(remaining[static_cast<std::size_t>(r_i)]) /
             static_cast<std::uint64_t>(total);
        --remaining[static_cast<std::size_t>(r_i)];
        --total;
    }
    return rank;
}

}  // namespace qcons
