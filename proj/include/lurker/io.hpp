#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lurker/graph.hpp"
#include "lurker/rank.hpp"

namespace lurker {

/// Writes "label <TAB> score <TAB> rank" sorted by rank (17 significant
/// digits, so equal inputs give byte-identical files).
void write_ranking_tsv(std::ostream& out, const DirectedGraph& g, const RankVector& ranks);

struct RankingFile {
    std::vector<std::string> labels;  // by rank order
    std::vector<double> scores;
};

RankingFile read_ranking_tsv(std::istream& in);

/// JSON sidecar recording method, parameters, iteration count and the
/// convergence flag, plus any caller-supplied extra fields.
std::string ranking_sidecar_json(const RankVector& ranks, const DirectedGraph& g,
                                 const std::vector<std::pair<std::string, std::string>>& extra = {});

/// Activity table TSV: a header line naming the counters ("label" first),
/// then one row per node. Labels are resolved against the graph; unknown
/// labels are skipped (counted in `skipped` when given).
ActivityTable load_activity_table(std::istream& in, const DirectedGraph& g,
                                  std::size_t* skipped = nullptr);

/// Trust statements TSV: "truster <TAB> trustee <TAB> count" with '#'
/// comments. Returns the weighted trust graph (edge j->i with weight
/// ET(j,i)); labels come from the statements themselves.
DirectedGraph load_trust_statements(std::istream& in);

/// Same, but labels are resolved against an existing graph's universe;
/// statements naming unknown labels are skipped (counted when requested).
DirectedGraph load_trust_statements(std::istream& in, const DirectedGraph& g,
                                    std::size_t* skipped = nullptr);

/// "label <TAB> dense_id" dump of the label mapping built at load time.
void write_id_map(std::ostream& out, const DirectedGraph& g);

/// Edge list TSV ("src <TAB> dst [<TAB> weight]") in (src, dst) order.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

}  // namespace lurker
