#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "twoec/digraph.hpp"
#include "twoec/dominator.hpp"
#include "twoec/oracle.hpp"

using namespace twoec;

namespace {

Digraph make_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Digraph g = new_graph(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void check_against_oracle(const FlowView& fv, VertexId s) {
    DominatorState fast = compute_dominator_state(fv, s);
    DominatorState slow = compute_dominator_tree_simple(fv, s);
    CHECK(same_dominator_tree(fast, slow));
    OracleDomTree ref = oracle_dominator_tree(fv, s);
    for (VertexId v = 1; v <= fv.vertex_count(); ++v) {
        CAPTURE(v);
        CHECK(fast.parent(v) == ref.parent[v]);
        CHECK(fast.depth(v) == ref.depth[v]);
        CHECK(fast.bridge(v) == (ref.is_bridge[v] != 0));
        CHECK(fast.root(v) == ref.root[v]);
        CHECK(fast.is_reachable(v) == (ref.reachable[v] != 0));
    }
}

}  // namespace

TEST_CASE("three-cycle tree, both orientations") {
    Digraph g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
    DominatorState fwd = compute_dominator_state(FlowView{&g, false}, 1);
    CHECK(fwd.parent(2) == 1);
    CHECK(fwd.parent(3) == 2);
    CHECK(fwd.depth(3) == 2);
    CHECK(fwd.bridge(2));
    CHECK(fwd.bridge(3));
    CHECK(fwd.root(2) == 2);
    CHECK(fwd.root(3) == 3);
    CHECK(fwd.pre(1) == 1);
    CHECK(fwd.subtree_size(1) == 3);
    CHECK(fwd.is_ancestor(2, 3));
    CHECK_FALSE(fwd.is_ancestor(3, 2));
    CHECK(fwd.nca(2, 3) == 2);

    DominatorState rev = compute_dominator_state(FlowView{&g, true}, 1);
    CHECK(rev.parent(3) == 1);
    CHECK(rev.parent(2) == 3);
    CHECK(rev.bridge(3));
    CHECK(rev.bridge(2));
}

TEST_CASE("bidirected triangle has a flat tree without bridges") {
    Digraph g = make_graph(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 1}, {1, 3}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    CHECK(st.parent(2) == 1);
    CHECK(st.parent(3) == 1);
    CHECK_FALSE(st.bridge(2));
    CHECK_FALSE(st.bridge(3));
    CHECK(st.root(2) == 1);
    CHECK(st.root(3) == 1);
}

TEST_CASE("chorded 4-cycle tree") {
    Digraph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    CHECK(st.parent(2) == 1);
    CHECK(st.parent(3) == 1);
    CHECK(st.parent(4) == 3);
    CHECK(st.bridge(2));
    CHECK_FALSE(st.bridge(3));
    CHECK(st.bridge(4));
    CHECK(st.root(3) == 1);
    CHECK(st.root(4) == 4);
}

TEST_CASE("both constructions match the reference on random digraphs") {
    std::mt19937 gen(315201);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(gen() % 10);
        Digraph g = new_graph(n);
        int attempts = static_cast<int>(gen() % (2 * n * n + 1));
        for (int i = 0; i < attempts; ++i) {
            VertexId u = 1 + static_cast<int>(gen() % n);
            VertexId v = 1 + static_cast<int>(gen() % n);
            if (u != v) g.add_edge(u, v);
        }
        VertexId s = 1 + static_cast<int>(gen() % n);
        check_against_oracle(FlowView{&g, false}, s);
        check_against_oracle(FlowView{&g, true}, s);
    }
}

TEST_CASE("insertion into the plain 4-cycle rewires one subtree") {
    Digraph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    CHECK(st.parent(3) == 2);
    CHECK(st.depth(4) == 3);

    g.add_edge(1, 3);
    InsertionReport rep = st.apply_insertion(1, 3);
    CHECK(rep.nca == 1);
    CHECK_FALSE(rep.locally_canceled);
    CHECK(rep.affected == std::vector<VertexId>{3});
    CHECK(rep.scanned == std::vector<VertexId>{3, 4});
    CHECK(rep.scanned_old_root == std::vector<VertexId>{3, 4});
    CHECK(rep.moved == std::vector<VertexId>{3});
    CHECK(rep.canceled == std::vector<std::pair<VertexId, VertexId>>{{2, 3}});
    CHECK(rep.bridge_p == 1);
    CHECK(rep.bridge_q == 2);

    CHECK(st.parent(3) == 1);
    CHECK(st.parent(4) == 3);
    CHECK(st.depth(4) == 2);
    CHECK_FALSE(st.bridge(3));
    CHECK(st.root(3) == 1);
    CHECK(st.root(4) == 4);
    CHECK(same_dominator_tree(st, compute_dominator_state(FlowView{&g, false}, 1)));
}

TEST_CASE("insertion whose head is an ancestor is a no-op") {
    Digraph g = make_graph(3, {{1, 2}, {2, 3}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    g.add_edge(3, 1);
    InsertionReport rep = st.apply_insertion(3, 1);
    CHECK(rep.nca == 1);
    CHECK(rep.affected.empty());
    CHECK(rep.scanned.empty());
    CHECK(rep.canceled.empty());
    CHECK(same_dominator_tree(st, compute_dominator_state(FlowView{&g, false}, 1)));
}

TEST_CASE("cancellation at the meeting point is flagged as local") {
    Digraph g = make_graph(5, {{1, 2}, {2, 3}, {2, 5}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    CHECK(st.bridge(3));
    g.add_edge(5, 3);
    InsertionReport rep = st.apply_insertion(5, 3);
    CHECK(rep.nca == 2);
    CHECK(rep.locally_canceled);
    CHECK(rep.affected.empty());
    CHECK(rep.canceled == std::vector<std::pair<VertexId, VertexId>>{{2, 3}});
    CHECK(rep.moved == std::vector<VertexId>{3});
    CHECK(rep.bridge_p == 2);
    CHECK(rep.bridge_q == 3);
    CHECK_FALSE(st.bridge(3));
    CHECK(st.root(3) == 2);
    CHECK(same_dominator_tree(st, compute_dominator_state(FlowView{&g, false}, 1)));
}

TEST_CASE("forward edge within a chain still cancels the skipped bridge") {
    Digraph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
    DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
    g.add_edge(1, 3);
    InsertionReport rep = st.apply_insertion(1, 3);
    CHECK(rep.nca == 1);
    CHECK(rep.affected == std::vector<VertexId>{3});
    CHECK(rep.canceled == std::vector<std::pair<VertexId, VertexId>>{{2, 3}});
    CHECK(st.parent(3) == 1);
    CHECK(st.depth(4) == 2);
    CHECK(same_dominator_tree(st, compute_dominator_state(FlowView{&g, false}, 1)));
}

TEST_CASE("random insertion sequences stay equal to recomputation") {
    std::mt19937 gen(777002);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(gen() % 9);
        Digraph g = new_graph(n);
        for (VertexId v = 2; v <= n; ++v) {
            g.add_edge(1 + static_cast<int>(gen() % (v - 1)), v);
        }
        int extra = static_cast<int>(gen() % (n * n / 2 + 1));
        for (int i = 0; i < extra; ++i) {
            VertexId u = 1 + static_cast<int>(gen() % n);
            VertexId v = 1 + static_cast<int>(gen() % n);
            if (u != v) g.add_edge(u, v);
        }
        DominatorState st = compute_dominator_state(FlowView{&g, false}, 1);
        for (int step = 0; step < 25; ++step) {
            VertexId u = 1 + static_cast<int>(gen() % n);
            VertexId v = 1 + static_cast<int>(gen() % n);
            if (u == v || g.add_edge(u, v) == kNoEdge) continue;
            st.apply_insertion(u, v);
            REQUIRE(same_dominator_tree(st, compute_dominator_state(FlowView{&g, false}, 1)));
        }
    }
}

TEST_CASE("random insertion sequences on strongly connected graphs, both sides") {
    std::mt19937 gen(424242);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(gen() % 9);
        Digraph g = new_graph(n);
        for (VertexId v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
        int extra = static_cast<int>(gen() % (n * n / 2 + 1));
        for (int i = 0; i < extra; ++i) {
            VertexId u = 1 + static_cast<int>(gen() % n);
            VertexId v = 1 + static_cast<int>(gen() % n);
            if (u != v) g.add_edge(u, v);
        }
        VertexId s = 1 + static_cast<int>(gen() % n);
        DominatorState fwd = compute_dominator_state(FlowView{&g, false}, s);
        DominatorState rev = compute_dominator_state(FlowView{&g, true}, s);
        for (int step = 0; step < 25; ++step) {
            VertexId u = 1 + static_cast<int>(gen() % n);
            VertexId v = 1 + static_cast<int>(gen() % n);
            if (u == v || g.add_edge(u, v) == kNoEdge) continue;
            fwd.apply_insertion(u, v);
            rev.apply_insertion(v, u);
            REQUIRE(same_dominator_tree(fwd, compute_dominator_state(FlowView{&g, false}, s)));
            REQUIRE(same_dominator_tree(rev, compute_dominator_state(FlowView{&g, true}, s)));
        }
    }
}
