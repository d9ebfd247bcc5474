#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twoec/digraph.hpp"

using namespace twoec;

TEST_CASE("edge ids are dense, self loops and duplicates rejected") {
    Digraph g = new_graph(4);
    CHECK(g.add_edge(1, 2) == 0);
    CHECK(g.add_edge(2, 3) == 1);
    CHECK(g.add_edge(1, 2) == kNoEdge);
    CHECK(g.add_edge(3, 3) == kNoEdge);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 1));
    CHECK(g.out(1).size() == 1);
    CHECK(g.in(2).size() == 1);
    CHECK(g.edge(1) == std::pair{2, 3});
    CHECK(g.add_edge(2, 1) == 2);
    CHECK(g.has_edge(2, 1));
}

TEST_CASE("flow view swaps orientation") {
    Digraph g = new_graph(3);
    g.add_edge(1, 2);
    FlowView fwd{&g, false};
    FlowView rev{&g, true};
    CHECK(fwd.out(1).size() == 1);
    CHECK(fwd.in(2).size() == 1);
    CHECK(rev.out(1).empty());
    REQUIRE(rev.out(2).size() == 1);
    CHECK(rev.out(2)[0].to == 1);
    CHECK(rev.in(1).size() == 1);
    CHECK(rev.edge(0) == std::pair{2, 1});
    CHECK(fwd.edge(0) == std::pair{1, 2});
}

TEST_CASE("induced subgraph relabels ascending and keeps edge order") {
    Digraph g = new_graph(6);
    g.add_edge(2, 5);
    g.add_edge(5, 1);  // dropped: 1 is outside
    g.add_edge(6, 2);
    g.add_edge(5, 6);
    auto [sub, to_global] = induced_subgraph(g, {5, 2, 6});
    CHECK(sub.vertex_count() == 3);
    REQUIRE(to_global.size() == 4);
    CHECK(to_global[1] == 2);
    CHECK(to_global[2] == 5);
    CHECK(to_global[3] == 6);
    REQUIRE(sub.edge_count() == 3);
    CHECK(sub.edge(0) == std::pair{1, 2});
    CHECK(sub.edge(1) == std::pair{3, 1});
    CHECK(sub.edge(2) == std::pair{2, 3});
}

TEST_CASE("induced subgraph of everything is a copy") {
    Digraph g = new_graph(3);
    g.add_edge(3, 1);
    g.add_edge(1, 2);
    auto [sub, to_global] = induced_subgraph(g, {1, 2, 3});
    CHECK(sub.edge_count() == 2);
    CHECK(sub.edge(0) == std::pair{3, 1});
    CHECK(sub.edge(1) == std::pair{1, 2});
    CHECK(to_global[2] == 2);
}
