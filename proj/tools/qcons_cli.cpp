//
// qcons — command-line front end.
//
// Subcommands:
//   partitions  list partitions of N with tabloid counts and cover relations
//   induced     build the tabloid graph of a base graph under a partition
//   optimize    budget-constrained spectral-gap weight optimization
//   verify      aldous | hasse | intertwining | reduction checks
//   simulate    qudit consensus trajectory and convergence-rate fit
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 unsupported request, 4 resource guard.
//
// JSON output is schema-stable: {tool, version, command, input, result} with
// full-precision numbers; tables round to 6 significant digits.  Identical
// invocations produce byte-identical output (the only environment influence
// is the thread count, which never changes results).
//
#include "CLI11.hpp"
#include "json.hpp"

#include "qcons/errors.hpp"
#include "qcons/graph.hpp"
#include "qcons/induced.hpp"
#include "qcons/kernels.hpp"
#include "qcons/partition.hpp"
#include "qcons/quantum.hpp"
#include "qcons/spectral.hpp"
#include "qcons/weight_opt.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ojson = nlohmann::ordered_json;
using namespace qcons;

constexpr const char* kToolVersion = "1.0.0";

std::string sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

ojson parts_json(const Partition& p) { return ojson(p.parts); }

std::string parts_csv(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += '+';
        s += std::to_string(p.parts[i]);
    }
    return s;
}

// ── Shared topology options ──────────────────────────────────────────────────

struct TopoOpts {
    std::string topology;
    std::string graph_file;
    int n = 0, p = 0, q = 0, q1 = 0, q2 = 0, n1 = 0, n2 = 0, n3 = 0;
    std::string factors;
    bool optimal = false;
    double D = 1.0;
    std::string format = "table";
};

void add_topology_options(CLI::App* c, TopoOpts& o, bool allow_optimal) {
    c->add_option("topology", o.topology,
                  "catalog topology: path, cycle, star, complete, paw, lollipop, "
                  "ccs-star, ccs-two-branch, symmetric-star, palm, coupled-complete, "
                  "product (an N may be appended, e.g. path4)");
    c->add_option("--graph-file", o.graph_file, "JSON graph file instead of a topology");
    c->add_option("-n,--vertices", o.n, "vertex count (path/cycle/star/complete)");
    c->add_option("-p", o.p, "core/branch count");
    c->add_option("-q", o.q, "tail/branch length");
    c->add_option("--q1", o.q1, "first branch length (ccs-two-branch)");
    c->add_option("--q2", o.q2, "second branch length (ccs-two-branch)");
    c->add_option("--n1", o.n1, "left clique size (coupled-complete)");
    c->add_option("--n2", o.n2, "shared clique size (coupled-complete)");
    c->add_option("--n3", o.n3, "right clique size (coupled-complete)");
    c->add_option("--factors", o.factors,
                  "product factors, e.g. complete:2,cycle:3 (path/cycle/star/complete)");
    c->add_option("-D,--budget", o.D, "total weight budget")->capture_default_str();
    if (allow_optimal)
        c->add_flag("--optimal", o.optimal,
                    "apply optimal closed-form weights (default: unit weights)");
}

std::string normalized(std::string name) {
    for (char& ch : name)
        ch = (ch == '-') ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return name;
}

std::vector<TopologySpec> parse_factors(const std::string& text) {
    std::vector<TopologySpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("factor '" + item + "' must look like name:N");
        const std::string name = normalized(item.substr(0, colon));
        TopologySpec f;
        f.N = std::stoi(item.substr(colon + 1));
        if (name == "path") f.kind = Topology::path;
        else if (name == "cycle") f.kind = Topology::cycle;
        else if (name == "star") f.kind = Topology::star;
        else if (name == "complete") f.kind = Topology::complete;
        else throw std::invalid_argument("unsupported product factor '" + name + "'");
        out.push_back(f);
    }
    if (out.empty()) throw std::invalid_argument("--factors must list at least one factor");
    return out;
}

TopologySpec topo_from_opts(const TopoOpts& o) {
    std::string name = normalized(o.topology);
    std::size_t pos = name.size();
    while (pos > 0 && std::isdigit(static_cast<unsigned char>(name[pos - 1]))) --pos;
    int suffix = 0;
    if (pos < name.size()) {
        suffix = std::stoi(name.substr(pos));
        name = name.substr(0, pos);
    }
    const int N = o.n > 0 ? o.n : suffix;

    TopologySpec s;
    if (name == "path" || name == "cycle" || name == "star" || name == "complete") {
        s.kind = name == "path"    ? Topology::path
                 : name == "cycle" ? Topology::cycle
                 : name == "star"  ? Topology::star
                                   : Topology::complete;
        s.N = N;
    } else if (name == "paw") {
        s.kind = Topology::paw;
    } else if (name == "lollipop" || name == "ccs_star" || name == "symmetric_star" ||
               name == "palm") {
        s.kind = name == "lollipop"   ? Topology::lollipop
                 : name == "ccs_star" ? Topology::ccs_star
                 : name == "symmetric_star" ? Topology::symmetric_star
                                            : Topology::palm;
        s.p = o.p;
        s.q = o.q;
    } else if (name == "ccs_two_branch") {
        s.kind = Topology::ccs_two_branch;
        s.p = o.p;
        s.q1 = o.q1;
        s.q2 = o.q2;
    } else if (name == "coupled_complete") {
        s.kind = Topology::coupled_complete;
        s.N1 = o.n1;
        s.N2 = o.n2;
        s.N3 = o.n3;
    } else if (name == "product" || name == "cartesian_product") {
        s.kind = Topology::cartesian_product;
        s.factors = parse_factors(o.factors);
    } else {
        throw std::invalid_argument("unknown topology '" + o.topology + "'");
    }
    return s;
}

struct GraphInput {
    WeightedGraph graph;
    std::optional<TopologySpec> spec;
    std::string label;
    bool optimal_weights = false;
};

GraphInput resolve_graph(const TopoOpts& o) {
    if (!o.graph_file.empty()) {
        if (o.optimal)
            throw std::invalid_argument("--optimal requires a catalog topology");
        std::ifstream f(o.graph_file);
        if (!f) throw std::invalid_argument("cannot open graph file '" + o.graph_file + "'");
        std::stringstream ss;
        ss << f.rdbuf();
        return {from_json(ss.str()), std::nullopt, o.graph_file, false};
    }
    if (o.topology.empty())
        throw std::invalid_argument("a topology or --graph-file is required");
    const TopologySpec s = topo_from_opts(o);
    WeightedGraph g = build_topology(s);
    if (o.optimal) g = g.with_orbit_weights(closed_form(s, o.D).weights_by_orbit);
    return {std::move(g), s, s.str(), o.optimal};
}

ojson make_root(const std::string& command, ojson input) {
    ojson root;
    root["tool"] = "qcons";
    root["version"] = kToolVersion;
    root["command"] = command;
    root["input"] = std::move(input);
    return root;
}

ojson input_echo(const TopoOpts& o) {
    ojson in;
    if (!o.graph_file.empty()) in["graph_file"] = o.graph_file;
    else in["topology"] = topo_from_opts(o).str();
    in["D"] = o.D;
    in["optimal_weights"] = o.optimal;
    in["format"] = o.format;
    return in;
}

void print_json(const ojson& root) { std::cout << root.dump(2) << "\n"; }

// ── partitions ───────────────────────────────────────────────────────────────

struct PartitionsOpts {
    int N = 0;
    std::string format = "table";
};

int cmd_partitions(const PartitionsOpts& o) {
    if (o.N < 1) throw std::invalid_argument("partitions: N must be at least 1");
    const std::vector<Partition> parts = enumerate_partitions(o.N);
    const std::vector<HasseEdge> covers =
        o.N >= 2 ? hasse_diagram(o.N).cover_edges : std::vector<HasseEdge>{};

    if (o.format == "json") {
        ojson in;
        in["N"] = o.N;
        in["format"] = o.format;
        ojson root = make_root("partitions", in);
        ojson& res = root["result"];
        res["count"] = parts.size();
        res["partitions"] = ojson::array();
        for (const Partition& p : parts) {
            ojson row;
            row["label"] = p.str();
            row["parts"] = parts_json(p);
            row["tabloids"] = tabloid_count(p);
            res["partitions"].push_back(std::move(row));
        }
        res["covers"] = ojson::array();
        for (const HasseEdge& e : covers) {
            ojson row;
            row["dominant"] = parts_json(e.dominant);
            row["dominated"] = parts_json(e.dominated);
            row["category"] = e.category;
            res["covers"].push_back(std::move(row));
        }
        print_json(root);
    } else if (o.format == "csv") {
        std::cout << "partition,tabloids\n";
        for (const Partition& p : parts)
            std::cout << parts_csv(p) << "," << tabloid_count(p) << "\n";
    } else {
        std::cout << "partitions of " << o.N << ": " << parts.size() << "\n\n";
        std::cout << "partition        tabloids\n";
        for (const Partition& p : parts)
            std::printf("%-16s %llu\n", p.str().c_str(),
                        static_cast<unsigned long long>(tabloid_count(p)));
        if (!covers.empty()) {
            std::cout << "\ncover relations (dominant > dominated):\n";
            for (const HasseEdge& e : covers)
                std::cout << e.dominant.str() << " > " << e.dominated.str() << "  [category "
                          << e.category << "]\n";
        }
    }
    return 0;
}

// ── induced ──────────────────────────────────────────────────────────────────

struct InducedOpts {
    TopoOpts topo;
    std::string partition;
};

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    if (parts.empty()) throw std::invalid_argument("--partition must list parts");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    for (int part : parts)
        if (part < 1) throw std::invalid_argument("partition parts must be positive");
    return Partition(parts);
}

int cmd_induced(const InducedOpts& o) {
    const GraphInput gi = resolve_graph(o.topo);
    const Partition p = parse_partition(o.partition);
    if (p.total() != gi.graph.n_vertices)
        throw std::invalid_argument("partition sums to " + std::to_string(p.total()) +
                                    " but the graph has " +
                                    std::to_string(gi.graph.n_vertices) + " vertices");

    const InducedGraph ig = induced_graph(gi.graph, p);
    const Spectrum spec = eigenvalues_sym(laplacian(ig.graph));
    const bool has_gap = ig.graph.n_vertices >= 2;
    const double gap = has_gap ? spec.eigenvalues[1] : 0.0;

    if (o.topo.format == "json") {
        ojson root = make_root("induced", input_echo(o.topo));
        root["input"]["partition"] = parts_json(p);
        ojson& res = root["result"];
        res["base"] = ojson::parse(to_json(gi.graph));
        res["partition"] = parts_json(p);
        res["vertices"] = ojson::array();
        for (std::size_t i = 0; i < ig.vertices.size(); ++i) {
            ojson row;
            row["index"] = i;
            row["word"] = ig.vertices[i].yamanouchi;
            res["vertices"].push_back(std::move(row));
        }
        res["graph"] = ojson::parse(to_json(ig.graph));
        res["eigenvalues"] = spec.eigenvalues;
        if (has_gap) res["lambda2"] = gap;
        else res["lambda2"] = nullptr;
        print_json(root);
    } else if (o.topo.format == "dot") {
        std::cout << to_dot(ig.graph);
    } else if (o.topo.format == "csv") {
        std::cout << "u,v,weight,orbit\n";
        for (std::size_t e = 0; e < ig.graph.edges.size(); ++e)
            std::cout << ig.graph.edges[e].first << "," << ig.graph.edges[e].second << ","
                      << sig6(ig.graph.weights[e]) << "," << ig.graph.orbit_of_edge[e]
                      << "\n";
    } else {
        std::cout << "base graph:  " << gi.label << "  (" << gi.graph.n_vertices
                  << " vertices, " << gi.graph.edge_count() << " edges)\n";
        std::cout << "partition:   " << p.str() << "\n";
        std::cout << "tabloids:    " << ig.vertices.size() << "\n";
        std::cout << "edges:       " << ig.graph.edge_count() << "\n";
        std::cout << "eigenvalues:";
        for (double ev : spec.eigenvalues) std::cout << " " << sig6(ev);
        std::cout << "\n";
        if (has_gap) std::cout << "lambda2:     " << sig6(gap) << "\n";
    }
    return 0;
}

// ── optimize ─────────────────────────────────────────────────────────────────

struct OptimizeOpts {
    TopoOpts topo;
    std::string method = "closed";
};

int cmd_optimize(const OptimizeOpts& o) {
    const bool from_file = !o.topo.graph_file.empty();
    std::string method = o.method;
    if (method == "auto") method = from_file ? "numeric" : "closed";

    const GraphInput gi = resolve_graph(o.topo);
    OptimalResult result;
    if (method == "closed") {
        if (!gi.spec)
            throw unsupported_error(
                "closed-form optimization needs a catalog topology, not a graph file");
        result = closed_form(*gi.spec, o.topo.D);
    } else {
        result = maximize_gap_numeric(gi.graph, o.topo.D);
    }
    result.certificate = dual_certificate(gi.graph, result, o.topo.D);

    if (o.topo.format == "json") {
        ojson root = make_root("optimize", input_echo(o.topo));
        root["input"]["method"] = method;
        ojson& res = root["result"];
        res["weights"] = ojson::object();
        for (const auto& [orbit, w] : result.weights_by_orbit)
            res["weights"][std::to_string(orbit)] = w;
        res["lambda2"] = result.lambda2;
        res["budget_used"] = result.budget_used;
        res["method"] = method_name(result.method);
        res["converged"] = result.converged;
        ojson cert;
        cert["accepted"] = result.certificate->accepted;
        cert["max_violation"] = result.certificate->max_violation;
        cert["common_value"] = result.certificate->common_value;
        cert["eigenspace_dim"] = result.certificate->eigenspace_dim;
        cert["iterations"] = result.certificate->iterations;
        res["certificate"] = std::move(cert);
        print_json(root);
    } else if (o.topo.format == "csv") {
        std::cout << "key,value\n";
        for (const auto& [orbit, w] : result.weights_by_orbit)
            std::cout << "weight[" << orbit << "]," << sig6(w) << "\n";
        std::cout << "lambda2," << sig6(result.lambda2) << "\n";
        std::cout << "budget_used," << sig6(result.budget_used) << "\n";
        std::cout << "method," << method_name(result.method) << "\n";
        std::cout << "converged," << (result.converged ? "true" : "false") << "\n";
        std::cout << "certificate_accepted,"
                  << (result.certificate->accepted ? "true" : "false") << "\n";
        std::cout << "certificate_max_violation," << sig6(result.certificate->max_violation)
                  << "\n";
    } else {
        std::cout << "topology:     " << gi.label << "\n";
        std::cout << "method:       " << method_name(result.method) << "\n";
        std::cout << "budget D:     " << sig6(o.topo.D) << "\n\n";
        std::cout << "orbit   weight\n";
        for (const auto& [orbit, w] : result.weights_by_orbit)
            std::printf("%-7d %s\n", orbit, sig6(w).c_str());
        std::cout << "\nlambda2:      " << sig6(result.lambda2) << "\n";
        std::cout << "budget used:  " << sig6(result.budget_used) << "\n";
        if (!result.converged) std::cout << "warning: numeric search hit its evaluation cap\n";
        std::cout << "certificate:  "
                  << (result.certificate->accepted ? "accepted" : "REJECTED")
                  << " (max violation " << sig6(result.certificate->max_violation)
                  << ", eigenspace dim " << result.certificate->eigenspace_dim << ", "
                  << result.certificate->iterations << " iterations)\n";
    }
    return 0;
}

// ── verify ───────────────────────────────────────────────────────────────────

struct VerifyOpts {
    TopoOpts topo;
    std::string which;
    int d = 2;
    std::uint64_t seed = 7;
    std::string times = "0.1,1,10";
    double tol = -1.0;  // negative: per-check default
};

std::vector<double> parse_times(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    if (out.empty()) throw std::invalid_argument("--times must list at least one time");
    return out;
}

int cmd_verify(const VerifyOpts& o) {
    const GraphInput gi = resolve_graph(o.topo);
    const bool json = o.topo.format == "json";
    const bool csv = o.topo.format == "csv";
    ojson root = make_root("verify", input_echo(o.topo));
    root["input"]["check"] = o.which;
    ojson& res = root["result"];
    bool passed = false;

    if (o.which == "aldous") {
        const AldousReport report = verify_aldous_extension(gi.graph);
        passed = report.all_equal;
        if (json) {
            res["check"] = "aldous";
            res["gaps"] = ojson::array();
            for (const PartitionGap& pg : report.gaps) {
                ojson row;
                row["partition"] = parts_json(pg.partition);
                row["gap"] = pg.gap;
                res["gaps"].push_back(std::move(row));
            }
            res["max_deviation"] = report.max_deviation;
            res["tolerance"] = report.tolerance;
            res["passed"] = passed;
            print_json(root);
        } else if (csv) {
            std::cout << "partition,gap\n";
            for (const PartitionGap& pg : report.gaps)
                std::cout << parts_csv(pg.partition) << "," << sig6(pg.gap) << "\n";
        } else {
            std::cout << "check: common spectral gap across induced graphs of " << gi.label
                      << "\n\npartition        gap\n";
            for (const PartitionGap& pg : report.gaps)
                std::printf("%-16s %s\n", pg.partition.str().c_str(), sig6(pg.gap).c_str());
            std::cout << "\nmax deviation: " << sig6(report.max_deviation) << " (tolerance "
                      << sig6(report.tolerance) << ")\n";
            std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
        }
    } else if (o.which == "hasse") {
        const HasseOrderingReport report = verify_hasse_ordering(gi.graph);
        passed = report.all_pass;
        if (json) {
            res["check"] = "hasse";
            res["pairs"] = ojson::array();
            for (const HassePairCheck& pc : report.pairs) {
                ojson row;
                row["dominant"] = parts_json(pc.dominant);
                row["dominated"] = parts_json(pc.dominated);
                row["gap_dominant"] = pc.gap_dominant;
                row["gap_dominated"] = pc.gap_dominated;
                row["gap_ordered"] = pc.gap_ordered;
                row["included"] = pc.included;
                res["pairs"].push_back(std::move(row));
            }
            res["tolerance"] = report.tolerance;
            res["passed"] = passed;
            print_json(root);
        } else if (csv) {
            std::cout << "dominant,dominated,gap_dominant,gap_dominated,gap_ordered,included\n";
            for (const HassePairCheck& pc : report.pairs)
                std::cout << parts_csv(pc.dominant) << "," << parts_csv(pc.dominated) << ","
                          << sig6(pc.gap_dominant) << "," << sig6(pc.gap_dominated) << ","
                          << (pc.gap_ordered ? "true" : "false") << ","
                          << (pc.included ? "true" : "false") << "\n";
        } else {
            std::cout << "check: gap ordering + spectrum inclusion on cover pairs of "
                      << gi.label << "\n\n";
            for (const HassePairCheck& pc : report.pairs)
                std::cout << pc.dominant.str() << " > " << pc.dominated.str() << "   gaps "
                          << sig6(pc.gap_dominant) << " / " << sig6(pc.gap_dominated)
                          << "   ordered " << (pc.gap_ordered ? "yes" : "NO")
                          << "   included " << (pc.included ? "yes" : "NO") << "\n";
            std::cout << "\nresult: " << (passed ? "PASS" : "FAIL") << "\n";
        }
    } else if (o.which == "intertwining") {
        const double tol = o.tol > 0 ? o.tol : 1e-10;
        const std::vector<HasseEdge> covers = hasse_diagram(gi.graph.n_vertices).cover_edges;
        double max_residual = 0.0;
        std::vector<std::pair<const HasseEdge*, double>> rows;
        for (const HasseEdge& e : covers) {
            const double r = verify_intertwining(gi.graph, e.dominant, e.dominated);
            rows.push_back({&e, r});
            max_residual = std::max(max_residual, r);
        }
        passed = max_residual <= tol;
        if (json) {
            res["check"] = "intertwining";
            res["pairs"] = ojson::array();
            for (const auto& [edge, r] : rows) {
                ojson row;
                row["dominant"] = parts_json(edge->dominant);
                row["dominated"] = parts_json(edge->dominated);
                row["residual"] = r;
                res["pairs"].push_back(std::move(row));
            }
            res["max_residual"] = max_residual;
            res["tolerance"] = tol;
            res["passed"] = passed;
            print_json(root);
        } else if (csv) {
            std::cout << "dominant,dominated,residual\n";
            for (const auto& [edge, r] : rows)
                std::cout << parts_csv(edge->dominant) << "," << parts_csv(edge->dominated)
                          << "," << sig6(r) << "\n";
        } else {
            std::cout << "check: L_n·P = P·L_n' on every cover pair of " << gi.label
                      << "\n\n";
            for (const auto& [edge, r] : rows)
                std::cout << edge->dominant.str() << " > " << edge->dominated.str()
                          << "   residual " << sig6(r) << "\n";
            std::cout << "\nmax residual: " << sig6(max_residual) << " (tolerance "
                      << sig6(tol) << ")\n";
            std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
        }
    } else if (o.which == "reduction") {
        const double tol = o.tol > 0 ? o.tol : 1e-8;
        const std::vector<double> times = parse_times(o.times);
        std::int64_t dim = 1;
        for (int i = 0; i < gi.graph.n_vertices; ++i) dim *= o.d;
        const CMat rho0 = random_density(static_cast<int>(dim), o.seed);
        const ReductionReport report =
            verify_reduction(gi.graph, o.d, rho0, times, tol);
        passed = report.passed;
        if (json) {
            res["check"] = "reduction";
            res["d"] = o.d;
            res["seed"] = o.seed;
            res["times"] = times;
            res["blocks"] = ojson::array();
            for (const ReductionBlock& b : report.blocks) {
                ojson row;
                row["partition"] = parts_json(b.partition);
                row["components"] = b.components;
                row["max_deviation"] = b.max_deviation;
                res["blocks"].push_back(std::move(row));
            }
            res["max_deviation"] = report.max_deviation;
            res["tolerance"] = report.tolerance;
            res["passed"] = passed;
            print_json(root);
        } else if (csv) {
            std::cout << "partition,components,max_deviation\n";
            for (const ReductionBlock& b : report.blocks)
                std::cout << parts_csv(b.partition) << "," << b.components << ","
                          << sig6(b.max_deviation) << "\n";
        } else {
            std::cout << "check: quantum trajectory matches classical tabloid flows on "
                      << gi.label << " (d=" << o.d << ", seed=" << o.seed << ")\n\n";
            std::cout << "partition        components   max deviation\n";
            for (const ReductionBlock& b : report.blocks)
                std::printf("%-16s %-12llu %s\n", b.partition.str().c_str(),
                            static_cast<unsigned long long>(b.components),
                            sig6(b.max_deviation).c_str());
            std::cout << "\nmax deviation: " << sig6(report.max_deviation) << " (tolerance "
                      << sig6(report.tolerance) << ")\n";
            std::cout << "result: " << (passed ? "PASS" : "FAIL") << "\n";
        }
    } else {
        throw std::invalid_argument("unknown check '" + o.which +
                                    "' (aldous, hasse, intertwining, reduction)");
    }
    return passed ? 0 : 1;
}

// ── simulate ─────────────────────────────────────────────────────────────────

struct SimulateOpts {
    TopoOpts topo;
    int d = 2;
    std::uint64_t seed = 7;
    int samples = 9;
};

int cmd_simulate(const SimulateOpts& o) {
    const GraphInput gi = resolve_graph(o.topo);
    const int N = gi.graph.n_vertices;
    std::int64_t dim = 1;
    for (int i = 0; i < N; ++i) dim *= o.d;
    const CMat rho0 = random_density(static_cast<int>(dim), o.seed);
    const DecayFit fit = decay_slope(gi.graph, o.d, rho0, o.samples);

    // Distance to the permutation average at T = 20/λ₂ — a full-matrix
    // cross-check of the coefficient-space fixed point (N ≤ 5 only).
    std::optional<double> consensus_distance;
    const double T = 20.0 / fit.lambda2;
    if (N <= 5) {
        const auto states = qcme_integrate(gi.graph, o.d, rho0, {T});
        consensus_distance =
            frobenius_distance(reconstruct_density(states[0]), consensus_state(rho0, o.d, N));
    }

    if (o.topo.format == "json") {
        ojson root = make_root("simulate", input_echo(o.topo));
        root["input"]["d"] = o.d;
        root["input"]["seed"] = o.seed;
        root["input"]["samples"] = o.samples;
        ojson& res = root["result"];
        res["lambda2"] = fit.lambda2;
        res["samples"] = ojson::array();
        for (std::size_t i = 0; i < fit.times.size(); ++i) {
            ojson row;
            row["t"] = fit.times[i];
            row["distance"] = fit.distances[i];
            res["samples"].push_back(std::move(row));
        }
        res["slope"] = fit.slope;
        res["relative_error"] = fit.relative_error;
        res["consensus_time"] = T;
        if (consensus_distance) res["consensus_distance"] = *consensus_distance;
        else res["consensus_distance"] = nullptr;
        print_json(root);
    } else if (o.topo.format == "csv") {
        std::cout << "t,distance\n";
        for (std::size_t i = 0; i < fit.times.size(); ++i)
            std::cout << sig6(fit.times[i]) << "," << sig6(fit.distances[i]) << "\n";
    } else {
        std::cout << "simulate: " << gi.label << "  (d=" << o.d << ", seed=" << o.seed
                  << (gi.optimal_weights ? ", optimal weights" : ", unit weights") << ")\n";
        std::cout << "lambda2:  " << sig6(fit.lambda2) << "\n\n";
        std::cout << "t            distance\n";
        for (std::size_t i = 0; i < fit.times.size(); ++i)
            std::printf("%-12s %s\n", sig6(fit.times[i]).c_str(),
                        sig6(fit.distances[i]).c_str());
        std::cout << "\nfitted slope:    " << sig6(fit.slope) << "  (target "
                  << sig6(-fit.lambda2) << ", relative error " << sig6(fit.relative_error)
                  << ")\n";
        if (consensus_distance)
            std::cout << "distance to permutation average at t=" << sig6(T) << ": "
                      << sig6(*consensus_distance) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schreier induced graphs, spectral-gap weight optimization, and "
                 "qudit consensus simulation"};
    app.require_subcommand(1);

    PartitionsOpts po;
    CLI::App* c_partitions = app.add_subcommand("partitions", "list partitions of N");
    c_partitions->add_option("N", po.N, "number of network nodes")->required();
    c_partitions->add_option("--format", po.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    InducedOpts io;
    CLI::App* c_induced =
        app.add_subcommand("induced", "build the tabloid graph under a partition");
    add_topology_options(c_induced, io.topo, true);
    c_induced->add_option("--partition", io.partition, "partition, e.g. 2,2")->required();
    c_induced->add_option("--format", io.topo.format, "table|json|csv|dot")
        ->check(CLI::IsMember({"table", "json", "csv", "dot"}));

    OptimizeOpts oo;
    CLI::App* c_optimize =
        app.add_subcommand("optimize", "budget-constrained spectral-gap maximization");
    add_topology_options(c_optimize, oo.topo, false);
    c_optimize->add_option("--method", oo.method, "closed|numeric|auto")
        ->check(CLI::IsMember({"closed", "numeric", "auto"}))
        ->capture_default_str();
    c_optimize->add_option("--format", oo.topo.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    VerifyOpts vo;
    CLI::App* c_verify = app.add_subcommand("verify", "structure and reduction checks");
    c_verify
        ->add_option("check", vo.which, "aldous | hasse | intertwining | reduction")
        ->required();
    add_topology_options(c_verify, vo.topo, true);
    c_verify->add_option("--qudit,-d", vo.d, "qudit dimension (reduction)")
        ->capture_default_str();
    c_verify->add_option("--seed", vo.seed, "initial-state seed (reduction)")
        ->capture_default_str();
    c_verify->add_option("--times", vo.times, "comma-separated check times (reduction)")
        ->capture_default_str();
    c_verify->add_option("--tol", vo.tol, "override the check tolerance");
    c_verify->add_option("--format", vo.topo.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    SimulateOpts so;
    CLI::App* c_simulate =
        app.add_subcommand("simulate", "qudit consensus trajectory and decay-rate fit");
    add_topology_options(c_simulate, so.topo, true);
    c_simulate->add_option("--qudit,-d", so.d, "qudit dimension")->capture_default_str();
    c_simulate->add_option("--seed", so.seed, "initial-state seed")->capture_default_str();
    c_simulate->add_option("--samples", so.samples, "sample count in the decay window")
        ->capture_default_str();
    c_simulate->add_option("--format", so.topo.format, "table|json|csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_partitions->parsed()) return cmd_partitions(po);
        if (c_induced->parsed()) return cmd_induced(io);
        if (c_optimize->parsed()) return cmd_optimize(oo);
        if (c_verify->parsed()) return cmd_verify(vo);
        if (c_simulate->parsed()) return cmd_simulate(so);
        return 2;
    } catch (const certificate_unavailable_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 3;
    } catch (const unsupported_error& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        std::cerr << "hint: the numeric maximizer (--method numeric) handles any "
                     "connected graph\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
