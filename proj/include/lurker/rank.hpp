#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "lurker/graph.hpp"

namespace lurker {

/// The six LurkerRank formulations: PageRank-style (teleportation term) and
/// alpha-centrality-style (exogenous term), each driven by in-neighbors,
/// out-neighbors, or both.
enum class LurkVariant { lr_in, lr_out, lr_in_out, ac_lr_in, ac_lr_out, ac_lr_in_out };

const char* variant_name(LurkVariant v);
LurkVariant variant_from_name(const std::string& name);

struct RankParams {
    double damping = 0.85;
    std::size_t max_iters = 200;
    double tolerance = 1e-9;  // L1 delta between successive normalized vectors
    bool normalize_final = true;
    unsigned threads = 1;
    bool track_ranking_stability = false;
};

struct RankVector {
    std::vector<double> scores;
    std::string method;
    RankParams params;
    std::size_t iterations = 0;
    bool converged = false;
    /// First iteration from which the induced ranking stopped changing
    /// (0 = not tracked). Only meaningful with track_ranking_stability.
    std::size_t ranking_stable_at = 0;
};

/// Total order by decreasing score; ties broken by ascending node id.
std::vector<NodeId> ranking_list(const std::vector<double>& scores);

RankVector lurker_rank(const DirectedGraph& g, LurkVariant variant, const RankParams& params = {});

/// Classic PageRank with raw out-degrees, uniform teleportation and uniform
/// dangling-mass redistribution.
RankVector pagerank(const DirectedGraph& g, const RankParams& params = {});

/// r = d A^T r + 1, iteration-capped with per-step L1 normalization.
RankVector alpha_centrality(const DirectedGraph& g, const RankParams& params = {});

/// Fair-bets capital accumulation: r_i = (1/out(i)) sum_{j in B_i} r_j with
/// add-one smoothed out-degrees and a uniform exogenous injection keeping the
/// fixed point well-defined on every graph (see tests for the conventions).
RankVector fair_bets(const DirectedGraph& g, const RankParams& params = {});

/// Baseline: score_i = smoothed in(i)/out(i).
RankVector in_out_ratio_rank(const DirectedGraph& g);

/// Node-indexed activity counters keyed by counter name
/// (retweets, comments, posts, favorites, views).
struct ActivityTable {
    std::unordered_map<std::string, std::vector<double>> counters;

    /// Counter column by name; missing values default to 0.
    double value(const std::string& name, NodeId u) const {
        const auto it = counters.find(name);
        if (it == counters.end() || u >= it->second.size()) return 0.0;
        return it->second[u];
    }
    bool has(const std::string& name) const { return counters.count(name) > 0; }
};

enum class DataDrivenFlavor { twitter, friendfeed, flickr_favorites, flickr_views };

const char* flavor_name(DataDrivenFlavor f);
DataDrivenFlavor flavor_from_name(const std::string& name);

/// Data-driven ranking r*_i = ratio_i * exp(-EI_i) with the flavor-specific
/// empirical influence term. Throws listing missing counter names when the
/// table lacks a required column.
RankVector data_driven_rank(const DirectedGraph& g, const ActivityTable& activity,
                            DataDrivenFlavor flavor);

struct TrustOracleResult {
    std::vector<double> h;             // normalized entropy in [0,1] per node
    std::vector<NodeId> good_seeds;    // sorted ascending
    double quartile_threshold = 0.0;   // H value cut for the good-seed set
};

/// Entropy-based trust oracle over a weighted trust graph (edge j->i with
/// weight ET(j,i) means j states trust in i). H(i) = 0 for nodes with fewer
/// than two trusting neighbors or zero total trust; the good-seed set is the
/// third quartile (top 25% by H, boundary ties included) of the H
/// distribution over nodes with >= 2 trusting neighbors.
TrustOracleResult trust_oracle_entropy(const DirectedGraph& g_trust);

/// PageRank over the trust graph with teleportation uniform on `seeds`
/// (dangling mass follows the teleport vector). Throws on an empty seed set.
RankVector trustrank(const DirectedGraph& g_trust, const std::vector<NodeId>& seeds,
                     const RankParams& params = {});

/// LurkerRank with the uniform teleportation/exogenous vector replaced by
/// `trust_vector` (L1-normalized, same node universe). PageRank-style
/// variants use (1-d) * t_i; alpha-style use |V| * t_i so total exogenous
/// mass matches the uniform case.
RankVector trust_biased_lurker_rank(const DirectedGraph& g, const std::vector<double>& trust_vector,
                                    LurkVariant variant, const RankParams& params = {});

}  // namespace lurker
