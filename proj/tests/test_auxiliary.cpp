#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <tuple>
#include <vector>

#include "twoec/auxiliary.hpp"
#include "twoec/dominator.hpp"
#include "twoec/oracle.hpp"

using namespace twoec;

namespace {

Digraph make_graph(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    Digraph g = new_graph(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Digraph four_cycle_both_chords() {
    return make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {3, 1}});
}

bool same_edges(const std::vector<AuxEdge>& got,
                const std::vector<std::tuple<VertexId, VertexId, EdgeId>>& want) {
    if (got.size() != want.size()) return false;
    for (size_t i = 0; i < got.size(); ++i) {
        auto [t, h, o] = want[i];
        if (got[i].tail != t || got[i].head != h || got[i].origin != o) return false;
    }
    return true;
}

// Straight parent climb, for checking the root-jump version.
VertexId climb_to(const DominatorState& st, VertexId v, VertexId r) {
    while (st.root(v) != r) v = st.parent(v);
    return v;
}

std::vector<std::vector<VertexId>> group_by_label(
    const Digraph& g, const DominatorState& fwd, const DominatorState& rev,
    const AuxComponents& cf, const AuxComponents& cr) {
    std::map<std::tuple<VertexId, VertexId, VertexId, VertexId>, std::vector<VertexId>> groups;
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        groups[{fwd.root(v), cf.canon[v], rev.root(v), cr.canon[v]}].push_back(v);
    std::vector<std::vector<VertexId>> blocks;
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

}  // namespace

TEST_CASE("chorded four cycle, forward side") {
    Digraph g = four_cycle_both_chords();
    DominatorState st = compute_dominator_state({&g, false}, 1);

    CHECK(st.root(1) == 1);
    CHECK(st.root(2) == 2);
    CHECK(st.root(3) == 1);
    CHECK(st.root(4) == 4);

    CHECK(nearest_ancestor_in(st, 1, 1) == 1);
    CHECK(nearest_ancestor_in(st, 3, 1) == 3);
    CHECK(nearest_ancestor_in(st, 2, 1) == 1);
    CHECK(nearest_ancestor_in(st, 4, 1) == 3);

    // (1,2) and (3,4) point at roots from outside and are dropped; (2,3) and
    // (4,1) re-tail to 1 and 3; both chords survive unchanged.
    auto edges = build_aux_edges(st);
    CHECK(same_edges(edges, {{1, 3, 1}, {3, 1, 3}, {1, 3, 4}, {3, 1, 5}}));

    AuxComponents comps = aux_components(st, edges);
    CHECK(comps.canon[1] == 1);
    CHECK(comps.canon[2] == 2);
    CHECK(comps.canon[3] == 1);
    CHECK(comps.canon[4] == 4);
    REQUIRE(comps.roots == std::vector<VertexId>{1, 2, 4});
    CHECK(comps.order[0] == std::vector<VertexId>{1});
    CHECK(comps.order[1] == std::vector<VertexId>{2});
    CHECK(comps.order[2] == std::vector<VertexId>{4});
}

TEST_CASE("chorded four cycle, reverse side") {
    Digraph g = four_cycle_both_chords();
    DominatorState st = compute_dominator_state({&g, true}, 1);

    CHECK(st.parent(4) == 1);
    CHECK(st.parent(3) == 1);
    CHECK(st.parent(2) == 3);
    CHECK(st.root(2) == 2);
    CHECK(st.root(3) == 1);
    CHECK(st.root(4) == 4);

    auto edges = build_aux_edges(st);
    CHECK(same_edges(edges, {{3, 1, 0}, {1, 3, 2}, {3, 1, 4}, {1, 3, 5}}));

    AuxComponents comps = aux_components(st, edges);
    CHECK(comps.canon[1] == 1);
    CHECK(comps.canon[3] == 1);
}

TEST_CASE("plain cycle leaves every auxiliary graph empty") {
    Digraph g = make_graph(3, {{1, 2}, {2, 3}, {3, 1}});
    for (bool rev : {false, true}) {
        CAPTURE(rev);
        DominatorState st = compute_dominator_state({&g, rev}, 1);
        // the wrap-around edge re-tails onto its own head and is dropped
        CHECK(build_aux_edges(st).empty());
        AuxComponents comps = aux_components(st, {});
        for (VertexId v = 1; v <= 3; ++v) CHECK(comps.canon[v] == v);
    }
}

TEST_CASE("labels of strongly connected graphs match the block oracle") {
    std::mt19937 rng(20260816);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Digraph g = new_graph(n);
        std::vector<VertexId> cyc(n);
        for (int i = 0; i < n; ++i) cyc[i] = i + 1;
        std::shuffle(cyc.begin(), cyc.end(), rng);
        for (int i = 0; i < n; ++i) g.add_edge(cyc[i], cyc[(i + 1) % n]);
        int extra = static_cast<int>(rng() % (2 * n + 1));
        for (int i = 0; i < extra; ++i)
            g.add_edge(1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));

        CAPTURE(trial);
        DominatorState fwd = compute_dominator_state({&g, false}, 1);
        DominatorState rev = compute_dominator_state({&g, true}, 1);
        auto ef = build_aux_edges(fwd);
        auto er = build_aux_edges(rev);
        AuxComponents cf = aux_components(fwd, ef);
        AuxComponents cr = aux_components(rev, er);

        CHECK(group_by_label(g, fwd, rev, cf, cr) == oracle_blocks(g));
    }
}

TEST_CASE("structural properties on arbitrary graphs") {
    std::mt19937 rng(7177);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Digraph g = new_graph(n);
        int m = static_cast<int>(rng() % (3 * n + 1));
        for (int i = 0; i < m; ++i)
            g.add_edge(1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));

        CAPTURE(trial);
        for (bool rev : {false, true}) {
            DominatorState st = compute_dominator_state({&g, rev}, 1);
            auto edges = build_aux_edges(st);
            AuxComponents comps = aux_components(st, edges);

            std::vector<char> seen_origin(g.edge_count(), 0);
            for (const AuxEdge& e : edges) {
                CHECK(st.root(e.tail) == st.root(e.head));
                CHECK(e.tail != e.head);
                CHECK(!seen_origin[e.origin]);
                seen_origin[e.origin] = 1;
            }

            // ranks per root from the emitted order
            std::vector<int> rank(n + 1, -1);
            for (const auto& list : comps.order)
                for (size_t i = 0; i < list.size(); ++i) rank[list[i]] = static_cast<int>(i);
            for (const AuxEdge& e : edges) {
                VertexId a = comps.canon[e.tail], b = comps.canon[e.head];
                if (a != b) CHECK(rank[a] < rank[b]);
            }

            for (VertexId v = 1; v <= n; ++v) {
                if (!st.is_reachable(v)) {
                    CHECK(comps.canon[v] == kNoVertex);
                    continue;
                }
                // every ancestor that roots a group can be jumped to
                for (VertexId a = v; a != kNoVertex; a = st.parent(a)) {
                    if (st.root(a) != a) continue;
                    CHECK(nearest_ancestor_in(st, v, a) == climb_to(st, v, a));
                }
            }
        }
    }
}
