#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lurker/graph.hpp"

namespace lurker {

/// Kendall tau between two total orders over the same node universe, via
/// O(M log M) inversion counting: tau = 1 - 4*discordant/(M(M-1)).
/// Throws on a universe mismatch or M < 2.
double kendall_tau(const std::vector<NodeId>& a, const std::vector<NodeId>& b);

/// Fagin's top-k intersection: F = (1/k) sum_{q=1..k} |a_:q ^ b_:q| / q.
/// Throws when k = 0 or k exceeds either list.
double fagin_intersection(const std::vector<NodeId>& a, const std::vector<NodeId>& b,
                          std::size_t k);

struct RelevanceSets {
    std::vector<NodeId> relevant;    // R
    std::vector<NodeId> irrelevant;  // N
};

/// Bpref over a ranking covering R and N: for each relevant node, the
/// fraction of the first |R| irrelevant nodes (in ranking order) placed
/// above it is charged against a full credit of 1. Throws on empty R.
double bpref(const std::vector<NodeId>& ranking, const RelevanceSets& sets);

/// Builds (R, N): with data-driven scores, N = nodes scoring <= 1 and R =
/// the top-l% of the complement by data-driven score. Without them, N is
/// the reference ranking's bottom-25% (or `n_size` nodes when given) and R
/// the top-l% of the rest. Set sizes use ceil(p * n).
RelevanceSets build_relevance_sets(const std::vector<double>* dd_scores,
                                   const std::vector<NodeId>& method_ranking, double l_percent,
                                   std::optional<std::size_t> n_size = std::nullopt);

/// Copy of `ranking` without the nodes flagged in `exclude` (the sink filter
/// used for Fagin comparisons).
std::vector<NodeId> filter_ranking(const std::vector<NodeId>& ranking,
                                   const std::vector<bool>& exclude);

}  // namespace lurker
