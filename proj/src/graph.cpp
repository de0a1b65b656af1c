#include "qcons/graph.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcons {

using ordered_json = nlohmann::ordered_json;

// ── WeightedGraph ────────────────────────────────────────────────────────────

void WeightedGraph::add_edge(int u, int v, double w, int orbit) {
    if (u == v) throw std::invalid_argument("add_edge: self-loop rejected");
    if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
        throw std::invalid_argument("add_edge: vertex index out of range");
    if (w < 0.0) throw std::invalid_argument("add_edge: negative weight rejected");
    if (u > v) std::swap(u, v);
    for (const auto& e : edges)
        if (e.first == u && e.second == v)
            throw std::invalid_argument("add_edge: duplicate edge rejected");
    edges.emplace_back(u, v);
    weights.push_back(w);
    orbit_of_edge.push_back(orbit);
}

std::vector<int> WeightedGraph::orbit_labels() const {
    std::set<int> s(orbit_of_edge.begin(), orbit_of_edge.end());
    return {s.begin(), s.end()};
}

int WeightedGraph::orbit_size(int label) const {
    return static_cast<int>(std::count(orbit_of_edge.begin(), orbit_of_edge.end(), label));
}

WeightedGraph WeightedGraph::with_orbit_weights(const std::map<int, double>& w) const {
    WeightedGraph g = *this;
    std::set<int> used;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto it = w.find(g.orbit_of_edge[e]);
        if (it == w.end())
            throw std::invalid_argument("with_orbit_weights: no weight for orbit " +
                                        std::to_string(g.orbit_of_edge[e]));
        g.weights[e] = it->second;
        used.insert(it->first);
    }
    for (const auto& [label, weight] : w)
        if (!used.count(label))
            throw std::invalid_argument("with_orbit_weights: orbit label " +
                                        std::to_string(label) +
                                        " matches no edge of the graph");
    return g;
}

Mat laplacian(const WeightedGraph& g) {
    Mat L(g.n_vertices, g.n_vertices);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const auto [u, v] = g.edges[e];
        const double w = g.weights[e];
        L(u, u) += w;
        L(v, v) += w;
        L(u, v) -= w;
        L(v, u) -= w;
    }
    return L;
}

bool is_connected(const WeightedGraph& g) {
    if (g.n_vertices == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n_vertices));
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        // A zero-weight edge contributes nothing to the Laplacian, so it
        // does not connect: connectivity here means a positive spectral gap.
        if (g.weights[e] <= 0.0) continue;
        const auto [u, v] = g.edges[e];
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n_vertices), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.n_vertices;
}

// ── Topology catalog ─────────────────────────────────────────────────────────

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

WeightedGraph build_path(int N) {
    require(N >= 2, "path: N >= 2 required");
    WeightedGraph g;
    g.n_vertices = N;
    const int m = N - 1;  // edge count
    for (int i = 0; i < m; ++i) {
        // Orbit = distance from the path center under the reflection symmetry:
        // even N has a central edge (orbit 0); odd N has a central vertex and
        // orbits start at 1.
        int orbit;
        if (m % 2 == 1) {
            orbit = std::abs(i - (m - 1) / 2);
        } else {
            orbit = i < m / 2 ? m / 2 - i : i - m / 2 + 1;
        }
        g.add_edge(i, i + 1, 1.0, orbit);
    }
    return g;
}

WeightedGraph build_cycle(int N) {
    require(N >= 3, "cycle: N >= 3 required");
    WeightedGraph g;
    g.n_vertices = N;
    for (int i = 0; i < N; ++i) g.add_edge(i, (i + 1) % N, 1.0, 0);
    return g;
}

WeightedGraph build_star(int N) {
    require(N >= 2, "star: N >= 2 required");
    WeightedGraph g;
    g.n_vertices = N;
    for (int i = 1; i < N; ++i) g.add_edge(0, i, 1.0, 0);
    return g;
}

WeightedGraph build_complete(int N) {
    require(N >= 2, "complete: N >= 2 required");
    WeightedGraph g;
    g.n_vertices = N;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) g.add_edge(i, j, 1.0, 0);
    return g;
}

WeightedGraph build_paw() {
    // C4 plus one chord (K4 minus an edge).  Orbit 0 is the chord — the edge
    // whose optimal weight vanishes — orbit 1 the four cycle edges.
    WeightedGraph g;
    g.n_vertices = 4;
    g.add_edge(1, 3, 1.0, 0);
    g.add_edge(0, 1, 1.0, 1);
    g.add_edge(1, 2, 1.0, 1);
    g.add_edge(2, 3, 1.0, 1);
    g.add_edge(0, 3, 1.0, 1);
    return g;
}

WeightedGraph build_lollipop(int p, int q) {
    require(p >= 2 && q >= 1, "lollipop: p >= 2 and q >= 1 required");
    // Complete graph K_{p+1} on {0..p}, bridging vertex p, tail p+1..p+q.
    WeightedGraph g;
    g.n_vertices = p + 1 + q;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g.add_edge(i, j, 1.0, -1);
    for (int i = 0; i < p; ++i) g.add_edge(i, p, 1.0, 0);
    for (int j = 1; j <= q; ++j) g.add_edge(p + j - 1, p + j, 1.0, j);
    return g;
}

WeightedGraph build_ccs_star(int p, int q) {
    require(p >= 2 && q >= 1, "ccs_star: p >= 2 and q >= 1 required");
    // Complete core 0..p-1; branch i occupies p+i·q .. p+i·q+q-1 outward.
    WeightedGraph g;
    g.n_vertices = p * (q + 1);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g.add_edge(i, j, 1.0, 0);
    for (int i = 0; i < p; ++i)
        for (int j = 1; j <= q; ++j) {
            const int a = j == 1 ? i : p + i * q + (j - 2);
            const int b = p + i * q + (j - 1);
            g.add_edge(a, b, 1.0, j);
        }
    return g;
}

WeightedGraph build_ccs_two_branch(int p, int q1, int q2) {
    require(p >= 2 && q1 >= 1 && q2 >= 1,
            "ccs_two_branch: p >= 2, q1 >= 1, q2 >= 1 required");
    // Core 0..p-1; per core vertex i, branch one occupies q1 vertices then
    // branch two q2 vertices, both outward.
    WeightedGraph g;
    g.n_vertices = p * (1 + q1 + q2);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) g.add_edge(i, j, 1.0, 0);
    for (int i = 0; i < p; ++i) {
        const int base = p + i * (q1 + q2);
        for (int j = 1; j <= q1; ++j) {
            const int a = j == 1 ? i : base + (j - 2);
            g.add_edge(a, base + (j - 1), 1.0, -j);
        }
        for (int j = 1; j <= q2; ++j) {
            const int a = j == 1 ? i : base + q1 + (j - 2);
            g.add_edge(a, base + q1 + (j - 1), 1.0, j);
        }
    }
    return g;
}

WeightedGraph build_symmetric_star(int p, int q) {
    require(p >= 2 && q >= 1, "symmetric_star: p >= 2 and q >= 1 required");
    // Center 0; branch i occupies 1+i·q .. 1+i·q+q-1 outward.
    WeightedGraph g;
    g.n_vertices = 1 + p * q;
    for (int i = 0; i < p; ++i)
        for (int j = 1; j <= q; ++j) {
            const int a = j == 1 ? 0 : 1 + i * q + (j - 2);
            g.add_edge(a, 1 + i * q + (j - 1), 1.0, j);
        }
    return g;
}

WeightedGraph build_palm(int p, int q) {
    require(p >= 1 && q >= 1, "palm: p >= 1 and q >= 1 required");
    // Center 0, leaves 1..p (orbit 0), tail p+1..p+q (orbit j).
    WeightedGraph g;
    g.n_vertices = 1 + p + q;
    for (int i = 1; i <= p; ++i) g.add_edge(0, i, 1.0, 0);
    for (int j = 1; j <= q; ++j) g.add_edge(j == 1 ? 0 : p + j - 1, p + j, 1.0, j);
    return g;
}

WeightedGraph build_coupled_complete(int N1, int N2, int N3) {
    require(N1 >= 1 && N2 >= 1 && N3 >= 1,
            "coupled_complete: N1, N2, N3 >= 1 required");
    require(N1 + N2 >= 2 && N2 + N3 >= 2, "coupled_complete: degenerate cliques");
    // Left 0..N1-1, shared N1..N1+N2-1, right N1+N2..N1+N2+N3-1.
    WeightedGraph g;
    g.n_vertices = N1 + N2 + N3;
    const auto left_end = N1, shared_end = N1 + N2;
    for (int i = 0; i < g.n_vertices; ++i)
        for (int j = i + 1; j < g.n_vertices; ++j) {
            const bool li = i < left_end, si = i < shared_end && !li;
            const bool lj = j < left_end, sj = j < shared_end && !lj;
            if (li && lj) g.add_edge(i, j, 1.0, -2);
            else if (li && sj) g.add_edge(i, j, 1.0, -1);
            else if (si && sj) g.add_edge(i, j, 1.0, 0);
            else if (si && !sj) g.add_edge(i, j, 1.0, 1);
            else if (!li && !si && !lj && !sj) g.add_edge(i, j, 1.0, 2);
        }
    return g;
}

}  // namespace

std::string TopologySpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Topology::path: os << "path(N=" << N << ")"; break;
        case Topology::cycle: os << "cycle(N=" << N << ")"; break;
        case Topology::star: os << "star(N=" << N << ")"; break;
        case Topology::complete: os << "complete(N=" << N << ")"; break;
        case Topology::paw: os << "paw"; break;
        case Topology::lollipop: os << "lollipop(p=" << p << ",q=" << q << ")"; break;
        case Topology::ccs_star: os << "ccs_star(p=" << p << ",q=" << q << ")"; break;
        case Topology::ccs_two_branch:
            os << "ccs_two_branch(p=" << p << ",q1=" << q1 << ",q2=" << q2 << ")";
            break;
        case Topology::symmetric_star:
            os << "symmetric_star(p=" << p << ",q=" << q << ")";
            break;
        case Topology::palm: os << "palm(p=" << p << ",q=" << q << ")"; break;
        case Topology::coupled_complete:
            os << "coupled_complete(N1=" << N1 << ",N2=" << N2 << ",N3=" << N3 << ")";
            break;
        case Topology::cartesian_product: {
            os << "cartesian_product(";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << " x ";
                os << factors[i].str();
            }
            os << ")";
            break;
        }
    }
    return os.str();
}

WeightedGraph build_topology(const TopologySpec& spec) {
    switch (spec.kind) {
        case Topology::path: return build_path(spec.N);
        case Topology::cycle: return build_cycle(spec.N);
        case Topology::star: return build_star(spec.N);
        case Topology::complete: return build_complete(spec.N);
        case Topology::paw: return build_paw();
        case Topology::lollipop: return build_lollipop(spec.p, spec.q);
        case Topology::ccs_star: return build_ccs_star(spec.p, spec.q);
        case Topology::ccs_two_branch:
            return build_ccs_two_branch(spec.p, spec.q1, spec.q2);
        case Topology::symmetric_star:
            return build_symmetric_star(spec.p, spec.q);
        case Topology::palm: return build_palm(spec.p, spec.q);
        case Topology::coupled_complete:
            return build_coupled_complete(spec.N1, spec.N2, spec.N3);
        case Topology::cartesian_product: {
            require(!spec.factors.empty(), "cartesian_product: at least one factor");
            // Factor i's edges are tagged with orbit i+1, matching the w_i
            // symbols of the product optimization.
            WeightedGraph acc;
            for (std::size_t i = 0; i < spec.factors.size(); ++i) {
                WeightedGraph f = build_topology(spec.factors[i]);
                for (auto& o : f.orbit_of_edge) o = static_cast<int>(i) + 1;
                acc = i == 0 ? f : cartesian_product(acc, f);
            }
            return acc;
        }
    }
    throw std::invalid_argument("build_topology: unknown kind");
}

WeightedGraph cartesian_product(const WeightedGraph& g1, const WeightedGraph& g2) {
    WeightedGraph g;
    g.n_vertices = g1.n_vertices * g2.n_vertices;
    const auto v = [&](int a, int b) { return a * g2.n_vertices + b; };

    // Keep g1's orbit labels; shift g2's above them when the ranges collide.
    int shift = 0;
    if (!g1.edges.empty() && !g2.edges.empty()) {
        const auto l1 = g1.orbit_labels();
        const auto l2 = g2.orbit_labels();
        if (l2.front() <= l1.back()) shift = l1.back() + 1 - l2.front();
    }

    for (int b = 0; b < g2.n_vertices; ++b)
        for (std::size_t e = 0; e < g1.edges.size(); ++e)
            g.add_edge(v(g1.edges[e].first, b), v(g1.edges[e].second, b), g1.weights[e],
                       g1.orbit_of_edge[e]);
    for (int a = 0; a < g1.n_vertices; ++a)
        for (std::size_t e = 0; e < g2.edges.size(); ++e)
            g.add_edge(v(a, g2.edges[e].first), v(a, g2.edges[e].second), g2.weights[e],
                       g2.orbit_of_edge[e] + shift);
    return g;
}

// ── Serialization ────────────────────────────────────────────────────────────

std::string to_json(const WeightedGraph& g) {
    ordered_json j;
    j["n_vertices"] = g.n_vertices;
    j["edges"] = ordered_json::array();
    for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
    j["weights"] = g.weights;
    j["orbits"] = g.orbit_of_edge;
    return j.dump();
}

WeightedGraph from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("from_json: malformed document: ") + e.what());
    }
    try {
        WeightedGraph g;
        g.n_vertices = j.at("n_vertices").get<int>();
        if (g.n_vertices <= 0)
            throw std::invalid_argument("from_json: field n_vertices must be positive");
        const auto& edges = j.at("edges");
        const auto& weights = j.at("weights");
        const auto& orbits = j.at("orbits");
        if (edges.size() != weights.size() || edges.size() != orbits.size())
            throw std::invalid_argument(
                "from_json: fields edges/weights/orbits must have equal length");
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!edges[e].is_array() || edges[e].size() != 2)
                throw std::invalid_argument("from_json: field edges[" + std::to_string(e) +
                                            "] must be a pair");
            g.add_edge(edges[e][0].get<int>(), edges[e][1].get<int>(),
                       weights[e].get<double>(), orbits[e].get<int>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("from_json: schema violation: ") + e.what());
    }
}

std::string to_dot(const WeightedGraph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        os << "  " << g.edges[e].first << " -- " << g.edges[e].second << " [label=\""
           << g.weights[e] << "\", orbit=" << g.orbit_of_edge[e] << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qcons
