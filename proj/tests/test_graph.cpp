#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "iset/generators.hpp"
#include "iset/graph.hpp"

using namespace iset;

namespace {
std::vector<std::pair<int, int>> edge_set(const Graph& g) { return g.edges(); }
}  // namespace

TEST_CASE("graph_from_edge_list canonicalizes") {
    const Graph p3 = graph_from_edge_list(3, {{0, 1}, {1, 2}});
    REQUIRE(p3.n() == 3);
    REQUIRE(p3.m() == 2);
    REQUIRE(edge_set(p3) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    const Graph single = graph_from_edge_list(1, {});
    REQUIRE(single.n() == 1);
    REQUIRE(single.m() == 0);

    // Duplicate and reversed pairs collapse to one edge.
    const Graph dedup = graph_from_edge_list(2, {{0, 1}, {1, 0}});
    REQUIRE(dedup.m() == 1);

    REQUIRE_THROWS(graph_from_edge_list(2, {{0, 2}}));  // endpoint out of range
    REQUIRE_THROWS(graph_from_edge_list(2, {{1, 1}}));  // self-loop
}

TEST_CASE("is_independent_set") {
    const Graph p3 = path_graph(3);
    REQUIRE(p3.is_independent_set({0, 2}));
    REQUIRE_FALSE(p3.is_independent_set({0, 1}));
    REQUIRE(p3.is_independent_set({}));  // empty set always independent
    REQUIRE(complete_graph(4).is_independent_set({}));
}

TEST_CASE("independence is monotone under subsets") {
    const Graph c5 = cycle_graph(5);
    REQUIRE(c5.is_independent_set({0, 2}));
    REQUIRE(c5.is_independent_set({0}));
    REQUIRE(c5.is_independent_set({2}));
    REQUIRE_FALSE(c5.is_independent_set({0, 2, 4}));  // 4 adjacent to 0
}

TEST_CASE("unconnected_count") {
    const Graph p3 = path_graph(3);
    REQUIRE(unconnected_count(p3, {1}) == 0);
    REQUIRE(unconnected_count(p3, {0}) == 1);
    REQUIRE(unconnected_count(Graph(4), {0}) == 3);
    REQUIRE(unconnected_count(p3, {}) == 3);  // N over the empty set is n
    REQUIRE_THROWS(unconnected_count(p3, {0, 1}));  // not independent
}

TEST_CASE("prufer decode base cases") {
    const Graph t2 = prufer_decode({}, 2);
    REQUIRE(edge_set(t2) == std::vector<std::pair<int, int>>{{0, 1}});

    // Code [2] at n=3 is the path 0-2-1.
    const Graph t3 = prufer_decode({2}, 3);
    REQUIRE(edge_set(t3) == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    REQUIRE_THROWS(prufer_decode({3}, 3));  // entry out of range
}

TEST_CASE("prufer roundtrip: all 16 codes at n=4, exhaustive trees to n=7") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const std::vector<int> code = {a, b};
            REQUIRE(prufer_encode(prufer_decode(code, 4)) == code);
        }
    for (int n = 2; n <= 7; ++n) {
        const auto trees = all_labelled_trees(n);
        REQUIRE(static_cast<long>(trees.size()) ==
                (n == 2 ? 1L : static_cast<long>(std::pow(n, n - 2)) ));
        for (const auto& t : trees) {
            REQUIRE(t.is_tree());
            REQUIRE(prufer_decode(prufer_encode(t), n).edges() == t.edges());
        }
    }
}

TEST_CASE("prufer decode is a bijection at n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        std::set<std::vector<std::pair<int, int>>> seen;
        for (const auto& t : all_labelled_trees(n)) seen.insert(t.edges());
        REQUIRE(static_cast<long>(seen.size()) == static_cast<long>(std::pow(n, n - 2)));
    }
}

TEST_CASE("prufer roundtrip on random trees up to n=200") {
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(77, static_cast<std::uint64_t>(trial));
        const int n = 2 + static_cast<int>(rng.below(199));
        const Graph t = sample_uniform_tree(n, rng);
        REQUIRE(prufer_decode(prufer_encode(t), n).edges() == t.edges());
    }
}

TEST_CASE("is_claw_free") {
    REQUIRE_FALSE(is_claw_free(star_graph(4)));  // K_{1,3} is itself a claw
    REQUIRE(is_claw_free(complete_graph(4)));
    REQUIRE(is_claw_free(path_graph(4)));
    // Star inside a larger graph is still detected.
    Graph g = path_graph(6);
    g.add_edge(1, 4);  // vertex 1 now has neighbors 0, 2, 4; 0-2, 0-4, 2-4 non-adjacent
    REQUIRE_FALSE(is_claw_free(g));
}

TEST_CASE("line graphs are claw-free") {
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(31, static_cast<std::uint64_t>(trial));
        const Graph g = sample_gnp(8, 0.4, rng);
        const Graph lg = line_graph(g).first;
        REQUIRE(lg.n() == g.m());
        REQUIRE(is_claw_free(lg));
    }
}

TEST_CASE("components, connectivity, trees") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    const auto comps = g.components();
    REQUIRE(comps.size() == 3);
    REQUIRE_FALSE(g.is_connected());
    REQUIRE(path_graph(4).is_tree());
    REQUIRE_FALSE(cycle_graph(4).is_tree());
    REQUIRE(Graph(1).is_connected());
}

TEST_CASE("induced subgraph") {
    const Graph c5 = cycle_graph(5);
    const Graph h = induced_subgraph(c5, {0, 1, 3});
    REQUIRE(h.n() == 3);
    REQUIRE(h.m() == 1);  // only edge 0-1 survives
}

TEST_CASE("edge list file format roundtrip with sigma") {
    const Graph g = cycle_graph(4);
    std::ostringstream out;
    write_graph(out, g, std::vector<int>{0, 2});
    std::istringstream in(out.str());
    const GraphFile gf = read_graph(in);
    REQUIRE(gf.graph.edges() == g.edges());
    REQUIRE(gf.sigma.has_value());
    REQUIRE(*gf.sigma == std::vector<int>{0, 2});
}

TEST_CASE("edge list parser accepts comments and rejects malformed input") {
    std::istringstream good("# header comment\n3 2\n0 1\n1 2\n");
    const GraphFile gf = read_graph(good);
    REQUIRE(gf.graph.n() == 3);
    REQUIRE(gf.graph.m() == 2);
    REQUIRE_FALSE(gf.sigma.has_value());

    std::istringstream missing("3 2\n0 1\n");
    REQUIRE_THROWS(read_graph(missing));
    std::istringstream range("2 1\n0 5\n");
    REQUIRE_THROWS(read_graph(range));
    std::istringstream loop("2 1\n1 1\n");
    REQUIRE_THROWS(read_graph(loop));
}

TEST_CASE("degree helpers") {
    const Graph s = star_graph(5);
    REQUIRE(s.max_degree() == 4);
    REQUIRE(s.degree(0) == 4);
    REQUIRE(s.degree(1) == 1);
    REQUIRE(s.has_edge(0, 3));
    REQUIRE_FALSE(s.has_edge(1, 2));
}
