#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "gen.hpp"
#include "lurker/graph.hpp"
#include "lurker/io.hpp"

using namespace lurker;

namespace {

DirectedGraph parse(const std::string& text, LoadOptions options = {}, LoadStats* stats = nullptr) {
    std::istringstream in(text);
    return load_edge_list(in, options, stats);
}

}  // namespace

TEST_CASE("load_edge_list on an empty stream") {
    const DirectedGraph g = parse("");
    CHECK(g.num_nodes() == 0);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("load_edge_list builds a reciprocal pair") {
    const DirectedGraph g = parse("a b\nb a\n");
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 2);
    const auto counts = reciprocity_counts(g);
    CHECK(counts.reciprocal_edges == 2);
    CHECK(counts.total_edges == 2);
    REQUIRE(g.find_label("a").has_value());
    REQUIRE(g.find_label("b").has_value());
    CHECK(*g.find_label("a") != *g.find_label("b"));
}

TEST_CASE("load_edge_list drops duplicates and self-loops") {
    LoadStats stats;
    const DirectedGraph g = parse("a b\na b\na a\n", {}, &stats);
    CHECK(g.num_nodes() == 2);
    CHECK(g.num_edges() == 1);
    CHECK(stats.duplicates_collapsed == 1);
    CHECK(stats.self_loops_dropped == 1);
}

TEST_CASE("load_edge_list error handling") {
    CHECK_THROWS_WITH_AS(parse("a\n"), doctest::Contains("line 1"), std::runtime_error);
    LoadOptions weighted;
    weighted.has_weights = true;
    CHECK_THROWS_AS(parse("a b 0\n", weighted), std::runtime_error);
    CHECK_THROWS_AS(parse("a b -2\n", weighted), std::runtime_error);
    CHECK_THROWS_AS(parse("a b x\n", weighted), std::runtime_error);
    LoadOptions no_dedupe;
    no_dedupe.dedupe = false;
    CHECK_THROWS_AS(parse("a b\na b\n", no_dedupe), std::runtime_error);
}

TEST_CASE("load_edge_list sums weights of collapsed duplicates") {
    LoadOptions options;
    options.has_weights = true;
    const DirectedGraph g = parse("a b 1.5\na b 2\n", options);
    CHECK(g.num_edges() == 1);
    CHECK(g.edge_weight(0, 1) == doctest::Approx(3.5));
}

TEST_CASE("load_edge_list reverse option swaps orientation") {
    LoadOptions options;
    options.reverse_edges = true;
    const DirectedGraph g = parse("a b\n", options);
    const NodeId a = *g.find_label("a");
    const NodeId b = *g.find_label("b");
    CHECK(g.has_edge(b, a));
    CHECK_FALSE(g.has_edge(a, b));
}

TEST_CASE("degrees with Laplace smoothing") {
    SUBCASE("single edge") {
        const DirectedGraph g = parse("u v\n");
        const DegreeTable deg = degrees(g);
        const NodeId u = *g.find_label("u"), v = *g.find_label("v");
        CHECK(deg.raw_out[u] == 1);
        CHECK(deg.raw_in[u] == 0);
        CHECK(deg.smoothed_out(u) == 2.0);
        CHECK(deg.smoothed_in(u) == 1.0);
        CHECK(deg.smoothed_in(v) == 2.0);
        CHECK(deg.smoothed_out(v) == 1.0);
        CHECK(deg.is_sink(v));
        CHECK(deg.is_source(u));
    }
    SUBCASE("isolated node") {
        const DirectedGraph g = DirectedGraph::from_edges(1, {});
        const DegreeTable deg = degrees(g);
        CHECK(deg.smoothed_in(0) == 1.0);
        CHECK(deg.smoothed_out(0) == 1.0);
        CHECK(deg.ratio(0) == 1.0);
    }
    SUBCASE("2-cycle") {
        const DirectedGraph g = parse("u v\nv u\n");
        const DegreeTable deg = degrees(g);
        for (NodeId i = 0; i < 2; ++i) {
            CHECK(deg.smoothed_in(i) == 2.0);
            CHECK(deg.smoothed_out(i) == 2.0);
        }
    }
}

TEST_CASE("reciprocity counts") {
    SUBCASE("single edge has none") {
        const auto counts = reciprocity_counts(parse("u v\n"));
        CHECK(counts.reciprocal_edges == 0);
        CHECK(counts.total_edges == 1);
    }
    SUBCASE("triangle plus one back edge") {
        // a->b->c->a plus b->a: only the (a,b) pair reciprocates
        const auto counts = reciprocity_counts(parse("a b\nb c\nc a\nb a\n"));
        CHECK(counts.reciprocal_edges == 2);
        CHECK(counts.total_edges == 4);
    }
    SUBCASE("subset-induced counts") {
        const DirectedGraph g = parse("a b\nb a\nb c\n");
        const std::vector<NodeId> subset{*g.find_label("a"), *g.find_label("b")};
        const auto counts = reciprocity_counts(g, &subset);
        CHECK(counts.reciprocal_edges == 2);
        CHECK(counts.total_edges == 2);
    }
}

TEST_CASE("induced subgraph") {
    const DirectedGraph g = parse("a b\nb c\n");
    SUBCASE("full node set is the identity") {
        std::vector<NodeId> all{0, 1, 2};
        const auto sub = induced_subgraph(g, all);
        CHECK(sub.graph.num_nodes() == 3);
        CHECK(sub.graph.num_edges() == 2);
    }
    SUBCASE("empty set") {
        const auto sub = induced_subgraph(g, {});
        CHECK(sub.graph.num_nodes() == 0);
        CHECK(sub.graph.num_edges() == 0);
    }
    SUBCASE("path endpoints only") {
        const std::vector<NodeId> nodes{*g.find_label("a"), *g.find_label("c")};
        const auto sub = induced_subgraph(g, nodes);
        CHECK(sub.graph.num_nodes() == 2);
        CHECK(sub.graph.num_edges() == 0);
    }
}

namespace {

// Reachability-based maximal SCC for the brute-force property check.
std::size_t brute_force_max_scc(const DirectedGraph& g) {
    const NodeId n = g.num_nodes();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeId u = 0; u < n; ++u) {
        reach[u][u] = true;
        for (NodeId v : g.out_neighbors(u)) reach[u][v] = true;
    }
    for (NodeId k = 0; k < n; ++k)
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::size_t best = 0;
    for (NodeId u = 0; u < n; ++u) {
        std::size_t size = 0;
        for (NodeId v = 0; v < n; ++v)
            if (reach[u][v] && reach[v][u]) ++size;
        best = std::max(best, size);
    }
    return best;
}

}  // namespace

TEST_CASE("max strongly connected component") {
    CHECK(max_strongly_connected_component(parse("a b\nb c\nc a\n")).size == 3);
    CHECK(max_strongly_connected_component(parse("a b\nb c\n")).size == 1);

    SUBCASE("two disjoint 2-cycles tie-break on the smallest member id") {
        const DirectedGraph g = parse("c d\nd c\na b\nb a\n");
        const auto scc = max_strongly_connected_component(g);
        CHECK(scc.size == 2);
        // labels c,d got ids 0,1; the tie must resolve to the cycle holding id 0
        CHECK(scc.members.front() == 0);
    }
    SUBCASE("matches brute force on random digraphs up to 8 nodes") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const DirectedGraph g = testgen::random_digraph(seed, 1, 8, 0.25);
            CAPTURE(seed);
            CHECK(max_strongly_connected_component(g).size == brute_force_max_scc(g));
        }
    }
    SUBCASE("masked nodes are excluded") {
        const DirectedGraph g = parse("a b\nb c\nc a\n");
        std::vector<bool> removed{false, true, false};
        CHECK(max_strongly_connected_component(g, &removed).size == 1);
    }
}

TEST_CASE("average path length estimate") {
    CHECK(estimate_avg_path_length(16009364, 132290000) == doctest::Approx(5.91).epsilon(0.002));
    CHECK(estimate_avg_path_length(493019, 19153367) == doctest::Approx(3.01).epsilon(0.002));
    CHECK(estimate_avg_path_length(4, 4) == doctest::Approx(2.0));
    CHECK_THROWS_AS(estimate_avg_path_length(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(estimate_avg_path_length(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(estimate_avg_path_length(10, 5), std::invalid_argument);  // 2|E| = |V|
}

TEST_CASE("transpose consistency and degree sums on random graphs") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const DirectedGraph g = testgen::random_digraph(seed, 2, 12, 0.3, seed % 2 == 0);
        std::set<std::pair<NodeId, NodeId>> from_out, from_in;
        std::size_t in_sum = 0, out_sum = 0;
        for (NodeId u = 0; u < g.num_nodes(); ++u) {
            for (NodeId v : g.out_neighbors(u)) from_out.emplace(u, v);
            for (NodeId v : g.in_neighbors(u)) from_in.emplace(v, u);
            in_sum += g.raw_in_degree(u);
            out_sum += g.raw_out_degree(u);
        }
        CAPTURE(seed);
        CHECK(from_out == from_in);
        CHECK(in_sum == g.num_edges());
        CHECK(out_sum == g.num_edges());
        if (g.weighted()) {
            for (NodeId u = 0; u < g.num_nodes(); ++u) {
                const auto nbrs = g.out_neighbors(u);
                const auto w = g.out_weights(u);
                for (std::size_t i = 0; i < nbrs.size(); ++i)
                    CHECK(g.edge_weight(u, nbrs[i]) == w[i]);
            }
        }
    }
}

TEST_CASE("induced subgraph of the full node set preserves the edge multiset") {
    for (std::uint64_t seed = 200; seed < 210; ++seed) {
        const DirectedGraph g = testgen::random_digraph(seed, 2, 10, 0.3);
        std::vector<NodeId> all(g.num_nodes());
        for (NodeId u = 0; u < g.num_nodes(); ++u) all[u] = u;
        const auto sub = induced_subgraph(g, all);
        REQUIRE(sub.graph.num_edges() == g.num_edges());
        const auto a = g.edge_list();
        const auto b = sub.graph.edge_list();
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].src == b[i].src);
            CHECK(a[i].dst == b[i].dst);
        }
    }
}

TEST_CASE("id map dump is a bijection") {
    const DirectedGraph g = parse("x y\ny z\n");
    std::ostringstream out;
    write_id_map(out, g);
    CHECK(out.str() == "x\t0\ny\t1\nz\t2\n");
}
