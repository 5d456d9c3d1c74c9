#include "lurker/netanalysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace lurker {

namespace {

std::size_t ceil_count(double percent, std::size_t n) {
    if (percent <= 0.0) return 0;
    const double frac = percent / 100.0;
    return std::min(n, static_cast<std::size_t>(std::ceil(frac * static_cast<double>(n))));
}

std::vector<NodeId> top_of(const std::vector<NodeId>& ranking, std::size_t count) {
    return {ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::vector<NodeId> bottom_of(const std::vector<NodeId>& ranking, std::size_t count) {
    return {ranking.end() - static_cast<std::ptrdiff_t>(count), ranking.end()};
}

std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

std::vector<ReciprocityRow> reciprocity_report(const DirectedGraph& g,
                                               const std::vector<NodeId>& ranking,
                                               const std::vector<double>& top_fractions,
                                               bool include_potential_lurkers) {
    if (ranking.size() != g.num_nodes())
        throw std::invalid_argument("reciprocity_report: ranking does not cover the graph");
    const ReciprocityCounts full = reciprocity_counts(g);

    std::vector<std::pair<std::string, std::vector<NodeId>>> selections;
    for (double f : top_fractions) {
        const std::size_t count = ceil_count(f, ranking.size());
        std::string name = "top-" + std::to_string(f);
        while (!name.empty() && name.back() == '0') name.pop_back();
        if (!name.empty() && name.back() == '.') name.pop_back();
        selections.emplace_back(name + "%", top_of(ranking, count));
    }
    if (include_potential_lurkers) {
        const DegreeTable deg = degrees(g);
        std::vector<NodeId> potential;
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            if (deg.ratio(u) > 1.0) potential.push_back(u);
        selections.emplace_back("ratio>1", std::move(potential));
    }

    std::vector<ReciprocityRow> rows;
    for (auto& [name, nodes] : selections) {
        const ReciprocityCounts induced = reciprocity_counts(g, &nodes);
        ReciprocityRow row;
        row.selection = name;
        row.selection_size = nodes.size();
        row.induced_edges = induced.total_edges;
        row.reciprocal_lurking_edges = induced.reciprocal_edges;
        row.rle_pct = full.total_edges == 0
                          ? 0.0
                          : 100.0 * static_cast<double>(induced.reciprocal_edges) /
                                static_cast<double>(full.total_edges);
        row.frac_of_original_reciprocal =
            full.reciprocal_edges == 0 ? 0.0
                                       : static_cast<double>(induced.reciprocal_edges) /
                                             static_cast<double>(full.reciprocal_edges);
        row.frac_reciprocal_within =
            induced.total_edges == 0 ? 0.0
                                     : static_cast<double>(induced.reciprocal_edges) /
                                           static_cast<double>(induced.total_edges);
        rows.push_back(std::move(row));
    }
    return rows;
}

AttachmentDistributions attachment_distributions(const DirectedGraph& g,
                                                 const std::vector<NodeId>& ranking,
                                                 double fraction_percent) {
    if (ranking.size() != g.num_nodes())
        throw std::invalid_argument("attachment_distributions: ranking does not cover the graph");
    if (fraction_percent <= 0.0 || fraction_percent > 50.0)
        throw std::invalid_argument("attachment fraction must lie in (0, 50] percent");

    const std::size_t count = ceil_count(fraction_percent, ranking.size());
    std::vector<char> is_lurker(g.num_nodes(), 0), is_active(g.num_nodes(), 0);
    for (NodeId u : top_of(ranking, count)) is_lurker[u] = 1;
    for (NodeId u : bottom_of(ranking, count)) is_active[u] = 1;

    AttachmentDistributions dist;
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        if (is_active[u]) {
            std::size_t lurkers = 0;  // lurkers consuming from this active user
            for (NodeId v : g.out_neighbors(u))
                if (is_lurker[v]) ++lurkers;
            dist.lurkers_per_active[lurkers]++;
        }
        if (is_lurker[u]) {
            std::size_t actives = 0;  // active users this lurker consumes from
            for (NodeId v : g.in_neighbors(u))
                if (is_active[v]) ++actives;
            dist.actives_per_lurker[actives]++;
        }
    }
    return dist;
}

namespace {

// Hurwitz zeta via direct summation plus an Euler-Maclaurin tail.
double hurwitz_zeta(double s, double a) {
    constexpr int kDirect = 64;
    double sum = 0.0;
    for (int k = 0; k < kDirect; ++k) sum += std::pow(a + k, -s);
    const double m = a + kDirect;
    sum += std::pow(m, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(m, -s);
    sum += s * std::pow(m, -s - 1.0) / 12.0;
    sum -= s * (s + 1.0) * (s + 2.0) * std::pow(m, -s - 3.0) / 720.0;
    return sum;
}

double powerlaw_loglik(double alpha, double xmin, double log_sum, std::size_t n_tail) {
    return -static_cast<double>(n_tail) * std::log(hurwitz_zeta(alpha, xmin)) - alpha * log_sum;
}

double mle_alpha(double xmin, double log_sum, std::size_t n_tail) {
    // golden-section maximization; the likelihood is unimodal in alpha
    double lo = 1.000001, hi = 10.0;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = powerlaw_loglik(x1, xmin, log_sum, n_tail);
    double f2 = powerlaw_loglik(x2, xmin, log_sum, n_tail);
    for (int it = 0; it < 90 && hi - lo > 1e-9; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = powerlaw_loglik(x2, xmin, log_sum, n_tail);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = powerlaw_loglik(x1, xmin, log_sum, n_tail);
        }
    }
    return (lo + hi) / 2.0;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<double>& samples) {
    if (samples.size() < 10)
        throw std::invalid_argument("fit_power_law requires at least 10 samples");
    std::vector<long long> values;
    values.reserve(samples.size());
    for (double s : samples) {
        if (s < 1.0) throw std::invalid_argument("fit_power_law requires samples >= 1");
        values.push_back(std::llround(s));
    }
    std::sort(values.begin(), values.end());
    if (values.front() == values.back())
        throw std::invalid_argument("fit_power_law: all samples identical (degenerate)");

    std::vector<long long> distinct(values);
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    PowerLawFit best;
    best.ks = 2.0;
    for (long long xmin : distinct) {
        const auto tail_begin =
            std::lower_bound(values.begin(), values.end(), xmin);
        const std::size_t n_tail = static_cast<std::size_t>(values.end() - tail_begin);
        if (n_tail < 10) break;  // values sorted, tails only shrink
        const auto d_begin = std::lower_bound(distinct.begin(), distinct.end(), xmin);
        if (distinct.end() - d_begin < 2) break;

        double log_sum = 0.0;
        for (auto it = tail_begin; it != values.end(); ++it)
            log_sum += std::log(static_cast<double>(*it));
        const double alpha = mle_alpha(static_cast<double>(xmin), log_sum, n_tail);

        // KS distance over the tail between empirical and fitted CDFs
        const double z = hurwitz_zeta(alpha, static_cast<double>(xmin));
        double ks = 0.0;
        std::size_t seen = 0;
        for (auto it = d_begin; it != distinct.end(); ++it) {
            const long long x = *it;
            const auto next = std::upper_bound(tail_begin, values.end(), x);
            seen = static_cast<std::size_t>(next - tail_begin);
            const double empirical = static_cast<double>(seen) / static_cast<double>(n_tail);
            const double fitted =
                1.0 - hurwitz_zeta(alpha, static_cast<double>(x) + 1.0) / z;
            ks = std::max(ks, std::abs(empirical - fitted));
        }
        if (ks < best.ks) {
            best.alpha = alpha;
            best.xmin = static_cast<double>(xmin);
            best.ks = ks;
        }
    }
    if (best.ks > 1.5) throw std::invalid_argument("fit_power_law: no admissible xmin");
    return best;
}

DelurkResult delurk_randomize(const DirectedGraph& g, const std::vector<NodeId>& ranking,
                              const RandomizationParams& params) {
    if (ranking.size() != g.num_nodes())
        throw std::invalid_argument("delurk_randomize: ranking does not cover the graph");
    if (params.t1 <= 0.0 || params.t1 > 100.0 || params.t2 <= 0.0 || params.t2 > 100.0)
        throw std::invalid_argument("cut-off percentages must lie in (0, 100]");
    if (params.t1 + params.t2 > 100.0)
        throw std::invalid_argument("top and bottom cut-offs must not overlap (t1 + t2 <= 100)");
    if (params.p <= 0.0 || params.p > 1.0)
        throw std::invalid_argument("selection probability must lie in (0, 1]");
    if (params.d < 0.0) throw std::invalid_argument("new-edge fraction d must be >= 0");

    const std::size_t n = ranking.size();
    std::vector<char> in_top(n, 0), in_bottom(n, 0);
    for (NodeId u : top_of(ranking, ceil_count(params.t1, n))) in_top[u] = 1;
    for (NodeId u : bottom_of(ranking, ceil_count(params.t2, n))) in_bottom[u] = 1;

    // E_al: existing edges from a bottom-ranked (active) node to a
    // top-ranked (lurker) node.
    std::vector<std::pair<NodeId, NodeId>> candidates;
    for (NodeId a = 0; a < g.num_nodes(); ++a) {
        if (!in_bottom[a]) continue;
        for (NodeId l : g.out_neighbors(a))
            if (in_top[l]) candidates.emplace_back(a, l);
    }

    DelurkResult result;
    result.candidate_edges = candidates.size();
    const double target = params.d * static_cast<double>(candidates.size());

    auto rebuild = [&](std::vector<Edge> extra) {
        std::vector<Edge> edges = g.edge_list();
        edges.insert(edges.end(), extra.begin(), extra.end());
        result.graph = DirectedGraph::from_edges(g.num_nodes(), std::move(edges), g.weighted());
        if (g.has_labels()) result.graph.set_labels(g.labels());
        result.added_edges = std::move(extra);
    };

    if (target <= 0.0) {  // d = 0 or empty E_al: nothing to insert
        rebuild({});
        if (candidates.empty()) result.warning = "no bottom-to-top edges to randomize";
        return result;
    }
    if (candidates.size() < 2) {
        rebuild({});
        result.target_reached = false;
        result.warning = "fewer than two candidate edges; graph returned unchanged";
        return result;
    }

    std::mt19937_64 rng(params.rng_seed);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    std::bernoulli_distribution accept(params.p);

    std::unordered_set<std::uint64_t> added_keys;
    std::vector<Edge> added;
    const std::size_t attempt_cap =
        1000 * (static_cast<std::size_t>(target) + 10) + 100 * candidates.size();
    std::size_t attempts = 0;

    while (static_cast<double>(added.size()) < target) {
        if (++attempts > attempt_cap) {
            result.target_reached = false;
            result.warning = "candidate pairs exhausted before reaching the target";
            break;
        }
        const auto [a1, l1] = candidates[pick(rng)];
        if (!accept(rng)) continue;
        const auto [a2, l2] = candidates[pick(rng)];
        if (a2 == a1 || l2 == l1) continue;
        if (!accept(rng)) continue;

        const std::uint64_t k1 = edge_key(l1, a2), k2 = edge_key(l2, a1);
        // both new edges must be absent from the original and the added set
        if (added_keys.count(k1) || added_keys.count(k2)) continue;
        if (g.has_edge(l1, a2) || g.has_edge(l2, a1)) continue;
        if (k1 == k2) continue;

        added_keys.insert(k1);
        added_keys.insert(k2);
        added.push_back({l1, a2, 1.0});
        added.push_back({l2, a1, 1.0});
    }

    rebuild(std::move(added));
    return result;
}

double directed_topological_overlap(const DirectedGraph& g, NodeId i, NodeId j) {
    if (!g.has_edge(i, j)) throw std::invalid_argument("directed_topological_overlap: edge absent");
    const auto r_i = g.out_neighbors(i);
    const auto b_j = g.in_neighbors(j);
    std::size_t common = 0;
    for (std::size_t x = 0, y = 0; x < r_i.size() && y < b_j.size();) {
        if (r_i[x] < b_j[y])
            ++x;
        else if (r_i[x] > b_j[y])
            ++y;
        else {
            ++common;
            ++x;
            ++y;
        }
    }
    const double denom = static_cast<double>(r_i.size()) - 1.0 + static_cast<double>(b_j.size()) -
                         1.0 - static_cast<double>(common);
    if (denom <= 0.0) return 0.0;
    return static_cast<double>(common) / denom;
}

namespace {

/// Edges sorted by increasing overlap, ties by (src, dst) for determinism.
std::vector<std::pair<double, std::pair<NodeId, NodeId>>> overlap_sweep(const DirectedGraph& g) {
    std::vector<std::pair<double, std::pair<NodeId, NodeId>>> edges;
    edges.reserve(g.num_edges());
    for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v : g.out_neighbors(u))
            edges.push_back({directed_topological_overlap(g, u, v), {u, v}});
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return edges;
}

}  // namespace

std::vector<PercolationRow> percolation_match(const DirectedGraph& g,
                                              const std::vector<NodeId>& ranking,
                                              double lurker_fraction_percent,
                                              const std::vector<double>& overlap_percentiles) {
    if (ranking.size() != g.num_nodes())
        throw std::invalid_argument("percolation_match: ranking does not cover the graph");
    const std::size_t lurker_count = ceil_count(lurker_fraction_percent, ranking.size());
    std::vector<char> is_lurker(g.num_nodes(), 0);
    for (NodeId u : top_of(ranking, lurker_count)) is_lurker[u] = 1;

    const auto edges = overlap_sweep(g);
    std::vector<PercolationRow> rows;
    std::vector<char> removed(g.num_nodes(), 0);
    for (double percentile : overlap_percentiles) {
        std::fill(removed.begin(), removed.end(), 0);
        const std::size_t m = ceil_count(percentile, edges.size());
        std::size_t removed_count = 0, matched = 0;
        for (std::size_t e = 0; e < m; ++e) {
            for (NodeId u : {edges[e].second.first, edges[e].second.second}) {
                if (!removed[u]) {
                    removed[u] = 1;
                    ++removed_count;
                    if (is_lurker[u]) ++matched;
                }
            }
        }
        PercolationRow row;
        row.percentile = percentile;
        row.removed_vertices = removed_count;
        row.matched_fraction =
            lurker_count == 0 ? 0.0
                              : static_cast<double>(matched) / static_cast<double>(lurker_count);
        row.removed_ratio = g.num_nodes() == 0 ? 0.0
                                               : static_cast<double>(removed_count) /
                                                     static_cast<double>(g.num_nodes());
        rows.push_back(row);
    }
    return rows;
}

const char* strategy_name(RemovalStrategy s) {
    switch (s) {
        case RemovalStrategy::lr_desc: return "lr-desc";
        case RemovalStrategy::lr_desc_no_sinks: return "lr-desc-no-sinks";
        case RemovalStrategy::overlap_asc: return "overlap-asc";
    }
    return "?";
}

RemovalStrategy strategy_from_name(const std::string& name) {
    if (name == "lr-desc") return RemovalStrategy::lr_desc;
    if (name == "lr-desc-no-sinks") return RemovalStrategy::lr_desc_no_sinks;
    if (name == "overlap-asc") return RemovalStrategy::overlap_asc;
    throw std::invalid_argument("unknown removal strategy: " + name);
}

std::vector<ResiliencePoint> resilience_curve(const DirectedGraph& g,
                                              const std::vector<NodeId>& ranking,
                                              RemovalStrategy strategy,
                                              const std::vector<double>& removal_fractions) {
    if (ranking.size() != g.num_nodes())
        throw std::invalid_argument("resilience_curve: ranking does not cover the graph");
    for (double f : removal_fractions)
        if (f < 0.0 || f > 1.0)
            throw std::invalid_argument("removal fractions must lie in [0, 1]");

    const std::size_t n = g.num_nodes();
    std::vector<NodeId> order;
    order.reserve(n);
    std::vector<char> placed(n, 0);
    auto push = [&](NodeId u) {
        if (!placed[u]) {
            placed[u] = 1;
            order.push_back(u);
        }
    };
    switch (strategy) {
        case RemovalStrategy::lr_desc:
            order = ranking;
            break;
        case RemovalStrategy::lr_desc_no_sinks: {
            // non-sink lurkers first; sinks trail in rank order
            for (NodeId u : ranking)
                if (g.raw_out_degree(u) > 0) push(u);
            for (NodeId u : ranking) push(u);
            break;
        }
        case RemovalStrategy::overlap_asc: {
            for (const auto& e : overlap_sweep(g)) {
                push(e.second.first);
                push(e.second.second);
            }
            for (NodeId u : ranking) push(u);  // vertices with no edges
            break;
        }
    }

    const std::size_t scc0 = max_strongly_connected_component(g).size;
    std::vector<ResiliencePoint> curve;
    std::vector<bool> removed(n, false);
    for (double f : removal_fractions) {
        std::fill(removed.begin(), removed.end(), false);
        const std::size_t m =
            std::min(n, static_cast<std::size_t>(std::ceil(f * static_cast<double>(n))));
        for (std::size_t i = 0; i < m; ++i) removed[order[i]] = true;
        const std::size_t scc = max_strongly_connected_component(g, &removed).size;
        ResiliencePoint point;
        point.fraction = f;
        point.removed = m;
        point.max_scc = scc;
        point.scc_ratio = scc0 == 0 ? 0.0 : static_cast<double>(scc) / static_cast<double>(scc0);
        curve.push_back(point);
    }
    return curve;
}

}  // namespace lurker
