#include "qcons/spectral.hpp"

#include "qcons/errors.hpp"
#include "qcons/induced.hpp"
#include "qcons/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace qcons {

namespace {

constexpr double kSymmetryRel = 1e-12;   // admissible ‖m−mᵀ‖_max / ‖m‖_max
constexpr double kAccuracyRel = 1e-10;   // certified eigenvalue accuracy / ‖m‖₂
constexpr double kGapCompareTol = 1e-8;  // gap comparisons, scaled by max weight
constexpr double kDisconnectRel = 1e-9;  // λ₂ below this × maxdeg ⇒ disconnected

double max_weight(const WeightedGraph& g) {
    double w = 0.0;
    for (double x : g.weights) w = std::max(w, std::abs(x));
    return w;
}

double max_weighted_degree(const Mat& L) {
    double d = 0.0;
    for (int i = 0; i < L.rows; ++i) d = std::max(d, L(i, i));
    return d;
}

// Throws unless g is connected, judged spectrally from its Laplacian gap.
void require_connected(const WeightedGraph& g, const char* who) {
    const Mat L = laplacian(g);
    const double maxdeg = max_weighted_degree(L);
    if (g.n_vertices > 1 && spectral_gap(L) <= kDisconnectRel * maxdeg)
        throw std::invalid_argument(std::string(who) + ": graph is disconnected");
}

}  // namespace

Spectrum eigenvalues_sym(const Mat& m) {
    if (m.rows != m.cols)
        throw std::invalid_argument("eigenvalues_sym: matrix is not square");
    const double scale = max_abs(m);
    if (asymmetry(m) > kSymmetryRel * scale)
        throw std::invalid_argument("eigenvalues_sym: matrix is not symmetric");

    const EighResult r = eigh(m);
    Spectrum s;
    s.eigenvalues = r.eigenvalues;
    const double norm2 = std::max(std::abs(s.eigenvalues.front()),
                                  std::abs(s.eigenvalues.back()));
    s.tolerance = kAccuracyRel * norm2;
    return s;
}

double spectral_gap(const Mat& L) {
    if (L.rows < 2)
        throw std::invalid_argument("spectral_gap: need at least a 2x2 Laplacian");
    return eigenvalues_sym(L).eigenvalues[1];
}

bool spectrum_included(const std::vector<double>& sub, const std::vector<double>& super,
                       double tol) {
    // Both ascending: advance through `super`, consuming a match for each
    // element of `sub`; multiplicity is respected because matches are
    // consumed.
    std::size_t j = 0;
    for (const double x : sub) {
        while (j < super.size() && super[j] < x - tol) ++j;
        if (j == super.size() || std::abs(super[j] - x) > tol) return false;
        ++j;
    }
    return true;
}

HasseOrderingReport verify_hasse_ordering(const WeightedGraph& g) {
    require_connected(g, "verify_hasse_ordering");
    const int N = g.n_vertices;

    HasseOrderingReport report;
    report.tolerance = kGapCompareTol * std::max(1.0, max_weight(g));
    report.all_pass = true;

    // Cache spectra per partition; several covers share endpoints.
    std::map<std::vector<int>, Spectrum> spectra;
    const auto spectrum_of = [&](const Partition& n) -> const Spectrum& {
        auto it = spectra.find(n.parts);
        if (it == spectra.end())
            it = spectra.emplace(n.parts, eigenvalues_sym(induced_graph(g, n).laplacian_view()))
                     .first;
        return it->second;
    };

    for (const HasseEdge& e : hasse_diagram(N).cover_edges) {
        const Spectrum& sn = spectrum_of(e.dominant);
        const Spectrum& snp = spectrum_of(e.dominated);

        HassePairCheck c{e.dominant, e.dominated};
        // The single-row partition's induced graph is one vertex; its gap is
        // out of reach, and the ordering against it is vacuous (gap 0 ≤ all).
        c.gap_dominant = sn.eigenvalues.size() > 1 ? sn.eigenvalues[1] : 0.0;
        c.gap_dominated = snp.eigenvalues.size() > 1 ? snp.eigenvalues[1] : 0.0;
        const bool dominant_trivial = sn.eigenvalues.size() <= 1;
        c.gap_ordered = dominant_trivial
                            ? true
                            : c.gap_dominated <= c.gap_dominant + report.tolerance;
        c.included = spectrum_included(sn.eigenvalues, snp.eigenvalues, report.tolerance);
        report.all_pass = report.all_pass && c.gap_ordered && c.included;
        report.pairs.push_back(std::move(c));
    }
    return report;
}

AldousReport verify_aldous_extension(const WeightedGraph& g) {
    const int N = g.n_vertices;
    if (N > 7)
        throw resource_error("verify_aldous_extension: N = " + std::to_string(N) +
                             " exceeds the guard N <= 7 (tabloid spaces grow factorially)");
    require_connected(g, "verify_aldous_extension");

    AldousReport report;
    report.tolerance = kGapCompareTol * std::max(1.0, max_weight(g));

    for (const Partition& n : enumerate_partitions(N)) {
        if (n.rows() == 1) continue;  // single-row partition: one tabloid, no gap
        report.gaps.push_back(
            PartitionGap{n, spectral_gap(induced_graph(g, n).laplacian_view())});
    }
    double lo = report.gaps.front().gap, hi = lo;
    for (const PartitionGap& pg : report.gaps) {
        lo = std::min(lo, pg.gap);
        hi = std::max(hi, pg.gap);
    }
    report.max_deviation = hi - lo;
    report.all_equal = report.max_deviation <= report.tolerance;
    return report;
}

}  // namespace qcons
