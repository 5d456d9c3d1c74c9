#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lurker/graph.hpp"

namespace lurker {

struct RandomizationParams {
    double t1 = 25.0;  // top cut-off percentage
    double t2 = 25.0;  // bottom cut-off percentage
    double p = 0.5;    // per-candidate acceptance probability
    double d = 1.0;    // maximum fraction of new edges relative to |E_al|
    std::uint64_t rng_seed = 0;
};

struct ReciprocityRow {
    std::string selection;                 // e.g. "top-25%" or "ratio>1"
    std::size_t selection_size = 0;
    std::size_t induced_edges = 0;
    std::size_t reciprocal_lurking_edges = 0;
    double rle_pct = 0.0;                   // reciprocal lurking edges / |E|, percent
    double frac_of_original_reciprocal = 0.0;
    double frac_reciprocal_within = 0.0;
};

/// Reciprocity measures over the subgraphs induced by top-ranked lurkers,
/// one row per top-fraction; optionally also over the "potential lurkers"
/// (smoothed in/out ratio above 1).
std::vector<ReciprocityRow> reciprocity_report(const DirectedGraph& g,
                                               const std::vector<NodeId>& ranking,
                                               const std::vector<double>& top_fractions,
                                               bool include_potential_lurkers = false);

struct AttachmentDistributions {
    // histogram: attached-count -> number of nodes with that count
    std::map<std::size_t, std::size_t> lurkers_per_active;
    std::map<std::size_t, std::size_t> actives_per_lurker;
};

/// Lurkers are the top-`fraction_percent` of the ranking, actives the bottom
/// same fraction; counts how many lurkers consume from each active and the
/// dual. Requires fraction_percent <= 50 so the two sets cannot overlap.
AttachmentDistributions attachment_distributions(const DirectedGraph& g,
                                                 const std::vector<NodeId>& ranking,
                                                 double fraction_percent);

struct PowerLawFit {
    double alpha = 0.0;
    double xmin = 1.0;
    double ks = 0.0;
};

/// Discrete maximum-likelihood power-law fit with xmin scanned over observed
/// values, picking the xmin minimizing the Kolmogorov-Smirnov distance
/// between empirical and fitted tail CDFs. Requires >= 10 samples >= 1 and
/// at least two distinct values.
PowerLawFit fit_power_law(const std::vector<double>& samples);

struct DelurkResult {
    DirectedGraph graph;
    std::vector<Edge> added_edges;
    std::size_t candidate_edges = 0;  // |E_al|
    bool target_reached = true;
    std::string warning;
};

/// Delurking-oriented randomization: repeatedly samples two candidate edges
/// (a1,l1), (a2,l2) from E_al = {(a,l) in E : a in bottom-t2, l in top-t1}
/// with distinct endpoints, each accepted with probability p, and inserts
/// (l1,a2) and (l2,a1) when neither already exists, until at least d*|E_al|
/// new edges were added. Fully deterministic for a fixed seed.
DelurkResult delurk_randomize(const DirectedGraph& g, const std::vector<NodeId>& ranking,
                              const RandomizationParams& params);

/// O(i,j) = |R_i ^ B_j| / ((|R_i|-1) + (|B_j|-1) - |R_i ^ B_j|) with raw
/// neighbor sets; 0 when the denominator is non-positive. Throws when (i,j)
/// is not an edge.
double directed_topological_overlap(const DirectedGraph& g, NodeId i, NodeId j);

struct PercolationRow {
    double percentile = 0.0;
    std::size_t removed_vertices = 0;
    double matched_fraction = 0.0;  // share of top lurkers inside the removed set
    double removed_ratio = 0.0;     // removed vertices / |V|
};

/// Sweeps edges by increasing directed topological overlap and reports, per
/// percentile of lowest-overlap edges, how much of the top-`lurker_fraction`
/// of the ranking their endpoints cover.
std::vector<PercolationRow> percolation_match(const DirectedGraph& g,
                                              const std::vector<NodeId>& ranking,
                                              double lurker_fraction_percent,
                                              const std::vector<double>& overlap_percentiles);

enum class RemovalStrategy { lr_desc, lr_desc_no_sinks, overlap_asc };

const char* strategy_name(RemovalStrategy s);
RemovalStrategy strategy_from_name(const std::string& name);

struct ResiliencePoint {
    double fraction = 0.0;
    std::size_t removed = 0;
    std::size_t max_scc = 0;
    double scc_ratio = 0.0;  // vs the unperturbed maximal SCC
};

/// Maximal-SCC resilience under targeted vertex removal. lr_desc removes by
/// decreasing rank; lr_desc_no_sinks removes non-sink lurkers first;
/// overlap_asc follows the endpoints of the increasing-overlap edge sweep.
std::vector<ResiliencePoint> resilience_curve(const DirectedGraph& g,
                                              const std::vector<NodeId>& ranking,
                                              RemovalStrategy strategy,
                                              const std::vector<double>& removal_fractions);

}  // namespace lurker
