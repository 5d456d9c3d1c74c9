#include "lurker/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <string>

namespace lurker {

namespace {

void build_side(NodeId n, const std::vector<Edge>& edges, bool by_src,
                std::vector<std::size_t>& offsets, std::vector<NodeId>& adj,
                std::vector<double>& weights, bool weighted) {
    offsets.assign(n + 1, 0);
    for (const Edge& e : edges) offsets[(by_src ? e.src : e.dst) + 1]++;
    for (NodeId u = 0; u < n; ++u) offsets[u + 1] += offsets[u];
    adj.resize(edges.size());
    weights.assign(weighted ? edges.size() : 0, 1.0);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : edges) {
        const NodeId key = by_src ? e.src : e.dst;
        const std::size_t pos = cursor[key]++;
        adj[pos] = by_src ? e.dst : e.src;
        if (weighted) weights[pos] = e.weight;
    }
}

}  // namespace

DirectedGraph DirectedGraph::from_edges(NodeId num_nodes, std::vector<Edge> edges,
                                        bool weighted, LoadStats* stats) {
    DirectedGraph g;
    g.num_nodes_ = num_nodes;
    g.weighted_ = weighted;

    std::size_t self_loops = 0;
    std::erase_if(edges, [&](const Edge& e) {
        if (e.src == e.dst) {
            ++self_loops;
            return true;
        }
        return false;
    });
    for (const Edge& e : edges) {
        if (e.src >= num_nodes || e.dst >= num_nodes)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.weight <= 0.0) throw std::invalid_argument("edge weight must be positive");
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
    });
    std::size_t duplicates = 0;
    std::vector<Edge> unique;
    unique.reserve(edges.size());
    for (const Edge& e : edges) {
        if (!unique.empty() && unique.back().src == e.src && unique.back().dst == e.dst) {
            unique.back().weight += e.weight;  // duplicates collapse, weights summed
            ++duplicates;
        } else {
            unique.push_back(e);
        }
    }
    if (stats) {
        stats->self_loops_dropped += self_loops;
        stats->duplicates_collapsed += duplicates;
    }

    build_side(num_nodes, unique, true, g.out_offsets_, g.out_targets_, g.out_w_, weighted);
    build_side(num_nodes, unique, false, g.in_offsets_, g.in_sources_, g.in_w_, weighted);
    return g;
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
    const auto nbrs = out_neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

double DirectedGraph::edge_weight(NodeId u, NodeId v) const {
    const auto nbrs = out_neighbors(u);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
    if (it == nbrs.end() || *it != v) throw std::invalid_argument("edge not present");
    if (!weighted_) return 1.0;
    return out_w_[out_offsets_[u] + static_cast<std::size_t>(it - nbrs.begin())];
}

std::vector<Edge> DirectedGraph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(num_edges());
    for (NodeId u = 0; u < num_nodes_; ++u) {
        const auto nbrs = out_neighbors(u);
        const auto w = out_weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            edges.push_back({u, nbrs[i], weighted_ ? w[i] : 1.0});
    }
    return edges;
}

std::string DirectedGraph::label(NodeId u) const {
    if (u < labels_.size()) return labels_[u];
    return std::to_string(u);
}

std::optional<NodeId> DirectedGraph::find_label(const std::string& label) const {
    const auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

void DirectedGraph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != num_nodes_) throw std::invalid_argument("label table size mismatch");
    labels_ = std::move(labels);
    label_index_.clear();
    label_index_.reserve(labels_.size());
    for (NodeId u = 0; u < labels_.size(); ++u) label_index_.emplace(labels_[u], u);
}

namespace {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    if (delimiter == '\0') {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) fields.emplace_back(line.substr(i, j - i));
            i = j;
        }
    } else {
        std::size_t start = 0;
        while (start <= line.size()) {
            const std::size_t end = line.find(delimiter, start);
            if (end == std::string::npos) {
                fields.emplace_back(line.substr(start));
                break;
            }
            fields.emplace_back(line.substr(start, end - start));
            start = end + 1;
        }
    }
    return fields;
}

}  // namespace

DirectedGraph load_edge_list(std::istream& in, const LoadOptions& options, LoadStats* stats) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto intern = [&](const std::string& s) -> NodeId {
        const auto [it, inserted] = index.emplace(s, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };

    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    LoadStats local;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        ++local.lines_parsed;
        const auto fields = split_fields(line, options.delimiter);
        const std::size_t expected = options.has_weights ? 3 : 2;
        if (fields.size() < expected)
            throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                     ": expected " + std::to_string(expected) + " fields");
        NodeId src = intern(fields[0]);
        NodeId dst = intern(fields[1]);
        if (options.reverse_edges) std::swap(src, dst);
        double w = 1.0;
        if (options.has_weights) {
            try {
                std::size_t pos = 0;
                w = std::stod(fields[2], &pos);
                if (pos != fields[2].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                         ": bad weight '" + fields[2] + "'");
            }
            if (w <= 0.0)
                throw std::runtime_error("edge list parse error at line " + std::to_string(line_no) +
                                         ": weight must be positive");
        }
        edges.push_back({src, dst, w});
    }

    if (!options.dedupe) {
        // dedupe off still rejects exact duplicates rather than creating a multigraph
        std::vector<std::pair<NodeId, NodeId>> seen;
        seen.reserve(edges.size());
        for (const Edge& e : edges) seen.emplace_back(e.src, e.dst);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::runtime_error("duplicate edges present and dedupe is disabled");
    }

    DirectedGraph g = DirectedGraph::from_edges(static_cast<NodeId>(labels.size()),
                                                std::move(edges), options.has_weights, &local);
    g.set_labels(std::move(labels));
    if (stats) *stats = local;
    return g;
}

DegreeTable degrees(const DirectedGraph& g) {
    DegreeTable table;
    table.raw_in.resize(g.num_nodes());
    table.raw_out.resize(g.num_nodes());
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        table.raw_in[u] = g.raw_in_degree(u);
        table.raw_out[u] = g.raw_out_degree(u);
    }
    return table;
}

ReciprocityCounts reciprocity_counts(const DirectedGraph& g, const std::vector<NodeId>* subset) {
    ReciprocityCounts counts;
    if (subset) {
        std::vector<bool> in_set(g.num_nodes(), false);
        for (NodeId u : *subset) in_set.at(u) = true;
        for (NodeId u : *subset) {
            for (NodeId v : g.out_neighbors(u)) {
                if (!in_set[v]) continue;
                ++counts.total_edges;
                if (g.has_edge(v, u)) ++counts.reciprocal_edges;
            }
        }
    } else {
        counts.total_edges = g.num_edges();
        for (NodeId u = 0; u < g.num_nodes(); ++u)
            for (NodeId v : g.out_neighbors(u))
                if (g.has_edge(v, u)) ++counts.reciprocal_edges;
    }
    return counts;
}

InducedSubgraph induced_subgraph(const DirectedGraph& g, const std::vector<NodeId>& nodes) {
    InducedSubgraph result;
    result.new_to_old = nodes;
    std::sort(result.new_to_old.begin(), result.new_to_old.end());
    result.new_to_old.erase(std::unique(result.new_to_old.begin(), result.new_to_old.end()),
                            result.new_to_old.end());
    std::vector<NodeId> old_to_new(g.num_nodes(), static_cast<NodeId>(-1));
    for (NodeId i = 0; i < result.new_to_old.size(); ++i)
        old_to_new[result.new_to_old[i]] = i;

    std::vector<Edge> edges;
    for (NodeId u : result.new_to_old) {
        const auto nbrs = g.out_neighbors(u);
        const auto w = g.out_weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (old_to_new[nbrs[i]] == static_cast<NodeId>(-1)) continue;
            edges.push_back({old_to_new[u], old_to_new[nbrs[i]], g.weighted() ? w[i] : 1.0});
        }
    }
    result.graph = DirectedGraph::from_edges(static_cast<NodeId>(result.new_to_old.size()),
                                             std::move(edges), g.weighted());
    return result;
}

SccResult max_strongly_connected_component(const DirectedGraph& g,
                                           const std::vector<bool>* removed) {
    const NodeId n = g.num_nodes();
    SccResult best;
    if (n == 0) return best;

    // Iterative Tarjan; recursion would overflow on long chains.
    constexpr NodeId kUnvisited = static_cast<NodeId>(-1);
    std::vector<NodeId> index(n, kUnvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    NodeId next_index = 0;

    struct Frame {
        NodeId node;
        std::size_t child;
    };
    std::vector<Frame> call;
    std::vector<NodeId> component;

    for (NodeId start = 0; start < n; ++start) {
        if (index[start] != kUnvisited) continue;
        if (removed && (*removed)[start]) continue;
        call.push_back({start, 0});
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!call.empty()) {
            Frame& frame = call.back();
            const NodeId u = frame.node;
            const auto nbrs = g.out_neighbors(u);
            bool descended = false;
            while (frame.child < nbrs.size()) {
                const NodeId v = nbrs[frame.child++];
                if (removed && (*removed)[v]) continue;
                if (index[v] == kUnvisited) {
                    index[v] = lowlink[v] = next_index++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.push_back({v, 0});
                    descended = true;
                    break;
                }
                if (on_stack[v]) lowlink[u] = std::min(lowlink[u], index[v]);
            }
            if (descended) continue;
            if (lowlink[u] == index[u]) {
                component.clear();
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != u);
                const NodeId comp_min = *std::min_element(component.begin(), component.end());
                const NodeId best_min =
                    best.members.empty() ? static_cast<NodeId>(-1) : best.members.front();
                if (component.size() > best.size ||
                    (component.size() == best.size && comp_min < best_min)) {
                    best.size = component.size();
                    best.members.assign(component.begin(), component.end());
                    std::sort(best.members.begin(), best.members.end());
                }
            }
            call.pop_back();
            if (!call.empty())
                lowlink[call.back().node] = std::min(lowlink[call.back().node], lowlink[u]);
        }
    }
    return best;
}

double estimate_avg_path_length(std::size_t num_nodes, std::size_t num_edges) {
    if (num_nodes < 2 || num_edges < 1)
        throw std::invalid_argument("average path length estimate requires |V| >= 2 and |E| >= 1");
    const double ratio = 2.0 * static_cast<double>(num_edges) / static_cast<double>(num_nodes);
    if (ratio <= 1.0)
        throw std::invalid_argument("average path length estimate undefined: 2|E|/|V| <= 1");
    return std::log(static_cast<double>(num_nodes)) / std::log(ratio);
}

double estimate_avg_path_length(const DirectedGraph& g) {
    return estimate_avg_path_length(g.num_nodes(), g.num_edges());
}

}  // namespace lurker
