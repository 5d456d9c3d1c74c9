#include "lurker/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lurker {

namespace {

std::string format_score(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_ranking_tsv(std::ostream& out, const DirectedGraph& g, const RankVector& ranks) {
    const std::vector<NodeId> order = ranking_list(ranks.scores);
    std::size_t rank = 1;
    for (NodeId u : order) {
        out << g.label(u) << '\t' << format_score(ranks.scores[u]) << '\t' << rank << '\n';
        ++rank;
    }
}

RankingFile read_ranking_tsv(std::istream& in) {
    RankingFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string label;
        double score;
        if (!(row >> label >> score))
            throw std::runtime_error("ranking file parse error at line " + std::to_string(line_no));
        file.labels.push_back(std::move(label));
        file.scores.push_back(score);
    }
    return file;
}

std::string ranking_sidecar_json(const RankVector& ranks, const DirectedGraph& g,
                                 const std::vector<std::pair<std::string, std::string>>& extra) {
    nlohmann::json j;
    j["method"] = ranks.method;
    j["damping"] = ranks.params.damping;
    j["tolerance"] = ranks.params.tolerance;
    j["max_iters"] = ranks.params.max_iters;
    j["normalize_final"] = ranks.params.normalize_final;
    j["iterations"] = ranks.iterations;
    j["converged"] = ranks.converged;
    if (ranks.ranking_stable_at > 0) j["ranking_stable_at"] = ranks.ranking_stable_at;
    j["num_nodes"] = g.num_nodes();
    j["num_edges"] = g.num_edges();
    for (const auto& [key, value] : extra) j[key] = value;
    return j.dump(2) + "\n";
}

ActivityTable load_activity_table(std::istream& in, const DirectedGraph& g, std::size_t* skipped) {
    ActivityTable table;
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> columns;
    std::size_t local_skipped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        if (columns.empty()) {
            std::string name;
            while (row >> name) columns.push_back(name);
            if (columns.size() < 2 || columns[0] != "label")
                throw std::runtime_error(
                    "activity table must start with a header line: label <counter>...");
            for (std::size_t c = 1; c < columns.size(); ++c)
                table.counters[columns[c]].assign(g.num_nodes(), 0.0);
            continue;
        }
        std::string label;
        if (!(row >> label))
            throw std::runtime_error("activity table parse error at line " + std::to_string(line_no));
        const auto node = g.find_label(label);
        for (std::size_t c = 1; c < columns.size(); ++c) {
            double value = 0.0;
            if (!(row >> value))
                throw std::runtime_error("activity table parse error at line " +
                                         std::to_string(line_no));
            if (node) table.counters[columns[c]][*node] = value;
        }
        if (!node) ++local_skipped;
    }
    if (skipped) *skipped = local_skipped;
    return table;
}

namespace {

DirectedGraph trust_from_stream(std::istream& in, const DirectedGraph* universe,
                                std::size_t* skipped) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, NodeId> index;
    auto resolve = [&](const std::string& s) -> std::optional<NodeId> {
        if (universe) return universe->find_label(s);
        const auto [it, inserted] = index.emplace(s, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(s);
        return it->second;
    };

    std::vector<Edge> statements;
    std::string line;
    std::size_t line_no = 0, local_skipped = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string truster, trustee;
        double count = 0.0;
        if (!(row >> truster >> trustee >> count))
            throw std::runtime_error("trust statements parse error at line " +
                                     std::to_string(line_no));
        if (count < 0.0)
            throw std::runtime_error("trust statements parse error at line " +
                                     std::to_string(line_no) + ": negative count");
        if (count == 0.0) continue;
        const auto src = resolve(truster);
        const auto dst = resolve(trustee);
        if (!src || !dst) {
            ++local_skipped;
            continue;
        }
        statements.push_back({*src, *dst, count});
    }

    const NodeId n = universe ? universe->num_nodes() : static_cast<NodeId>(labels.size());
    DirectedGraph g = DirectedGraph::from_edges(n, std::move(statements), true);
    if (universe) {
        if (universe->has_labels()) g.set_labels(universe->labels());
    } else {
        g.set_labels(std::move(labels));
    }
    if (skipped) *skipped = local_skipped;
    return g;
}

}  // namespace

DirectedGraph load_trust_statements(std::istream& in) {
    return trust_from_stream(in, nullptr, nullptr);
}

DirectedGraph load_trust_statements(std::istream& in, const DirectedGraph& g,
                                    std::size_t* skipped) {
    return trust_from_stream(in, &g, skipped);
}

void write_id_map(std::ostream& out, const DirectedGraph& g) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) out << g.label(u) << '\t' << u << '\n';
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
        const auto nbrs = g.out_neighbors(u);
        const auto w = g.out_weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            out << g.label(u) << '\t' << g.label(nbrs[i]);
            if (g.weighted()) out << '\t' << format_score(w[i]);
            out << '\n';
        }
    }
}

}  // namespace lurker
