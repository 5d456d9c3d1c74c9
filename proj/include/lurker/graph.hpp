#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace lurker {

/// Dense node index. External labels are remapped to 0..|V|-1 at load time.
using NodeId = std::uint32_t;

/// A directed edge with an optional positive weight (1.0 when unweighted).
struct Edge {
    NodeId src;
    NodeId dst;
    double weight = 1.0;
};

struct LoadOptions {
    char delimiter = '\0';       // '\0' splits on any run of spaces/tabs
    bool has_weights = false;
    bool dedupe = true;          // collapse duplicate (u,v) pairs, summing weights
    bool reverse_edges = false;  // swap src/dst at ingest
};

struct LoadStats {
    std::size_t lines_parsed = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

/// Immutable directed graph in compressed adjacency form, kept in both
/// orientations. Edge (u,v) means "v consumes information produced by u".
/// No self-loops, no duplicate edges; neighbor lists are sorted by id.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Builds the graph from an edge list. Self-loops are dropped and
    /// duplicates collapsed (weights summed when weighted); both are counted
    /// in `stats` when given.
    static DirectedGraph from_edges(NodeId num_nodes, std::vector<Edge> edges,
                                    bool weighted = false, LoadStats* stats = nullptr);

    NodeId num_nodes() const { return num_nodes_; }
    std::size_t num_edges() const { return out_targets_.size(); }
    bool weighted() const { return weighted_; }

    std::span<const NodeId> out_neighbors(NodeId u) const {
        return {out_targets_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
    }
    std::span<const NodeId> in_neighbors(NodeId u) const {
        return {in_sources_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
    }
    std::span<const double> out_weights(NodeId u) const {
        return {out_w_.data() + out_offsets_[u], out_offsets_[u + 1] - out_offsets_[u]};
    }
    std::span<const double> in_weights(NodeId u) const {
        return {in_w_.data() + in_offsets_[u], in_offsets_[u + 1] - in_offsets_[u]};
    }

    std::size_t raw_out_degree(NodeId u) const { return out_offsets_[u + 1] - out_offsets_[u]; }
    std::size_t raw_in_degree(NodeId u) const { return in_offsets_[u + 1] - in_offsets_[u]; }

    /// True when edge (u,v) exists. Binary search on the sorted out-list.
    bool has_edge(NodeId u, NodeId v) const;

    /// Weight of edge (u,v); throws if the edge is absent.
    double edge_weight(NodeId u, NodeId v) const;

    /// Edge list in (src, dst) lexicographic order.
    std::vector<Edge> edge_list() const;

    /// External label of a node ("<id>" when the graph carries no label table).
    std::string label(NodeId u) const;
    bool has_labels() const { return !labels_.empty(); }
    std::optional<NodeId> find_label(const std::string& label) const;
    void set_labels(std::vector<std::string> labels);
    const std::vector<std::string>& labels() const { return labels_; }

private:
    NodeId num_nodes_ = 0;
    bool weighted_ = false;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<NodeId> out_targets_;
    std::vector<double> out_w_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<NodeId> in_sources_;
    std::vector<double> in_w_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
};

/// Raw and Laplace add-one smoothed degrees for every node.
struct DegreeTable {
    std::vector<std::size_t> raw_in;
    std::vector<std::size_t> raw_out;

    double smoothed_in(NodeId u) const { return static_cast<double>(raw_in[u]) + 1.0; }
    double smoothed_out(NodeId u) const { return static_cast<double>(raw_out[u]) + 1.0; }
    /// Smoothed in/out-degree ratio, always finite and positive.
    double ratio(NodeId u) const { return smoothed_in(u) / smoothed_out(u); }
    bool is_sink(NodeId u) const { return raw_out[u] == 0; }
    bool is_source(NodeId u) const { return raw_in[u] == 0; }
};

/// Parses a "src <sep> dst [<sep> weight]" edge-list stream. Lines starting
/// with '#' are comments. Throws std::runtime_error with the offending line
/// number on malformed input or non-positive weights.
DirectedGraph load_edge_list(std::istream& in, const LoadOptions& options = {},
                             LoadStats* stats = nullptr);

DegreeTable degrees(const DirectedGraph& g);

struct ReciprocityCounts {
    std::size_t reciprocal_edges = 0;
    std::size_t total_edges = 0;
};

/// Counts edges (u,v) whose reverse (v,u) also exists. When `subset` is given,
/// counts are over the subset-induced subgraph.
ReciprocityCounts reciprocity_counts(const DirectedGraph& g,
                                     const std::vector<NodeId>* subset = nullptr);

struct InducedSubgraph {
    DirectedGraph graph;
    std::vector<NodeId> new_to_old;  // new id -> original id
};

InducedSubgraph induced_subgraph(const DirectedGraph& g, const std::vector<NodeId>& nodes);

struct SccResult {
    std::size_t size = 0;
    std::vector<NodeId> members;  // sorted ascending
};

/// Largest strongly connected component; ties broken by smallest minimum
/// member id. `removed` masks nodes out of consideration when given.
SccResult max_strongly_connected_component(const DirectedGraph& g,
                                           const std::vector<bool>* removed = nullptr);

/// Closed-form estimate log(|V|) / log(2|E|/|V|). Throws on degenerate input
/// (|V| < 2, |E| < 1, or 2|E| <= |V|).
double estimate_avg_path_length(const DirectedGraph& g);
double estimate_avg_path_length(std::size_t num_nodes, std::size_t num_edges);

}  // namespace lurker
