#pragma once

#include <utility>
#include <vector>

#include "twoec/digraph.hpp"

// Brute-force reference implementations. Everything here recomputes from
// scratch and is meant for validating the incremental engine on small inputs,
// not for production use. Deliberately shares nothing with the engine beyond
// the graph container.
namespace twoec {

struct SccPartition {
    std::vector<int> comp;  // 1..n -> dense id, numbered by first occurrence
    int count = 0;

    bool same(VertexId u, VertexId v) const { return comp[u] == comp[v]; }
};

SccPartition scc_ids(const Digraph& g);
SccPartition scc_ids_without(const Digraph& g, EdgeId skip);

// Edges whose deletion changes the strongly-connected relation, in
// lexicographic order.
std::vector<std::pair<VertexId, VertexId>> oracle_strong_bridges(const Digraph& g);

// True iff u and v stay in the same SCC under deletion of any single edge.
bool oracle_two_ec(const Digraph& g, VertexId u, VertexId v);

// Partition of all vertices into 2-edge-connected blocks (singletons
// included). Blocks ordered by smallest member, members ascending. On tiny
// graphs the result is cross-checked against an independent max-flow
// characterization; a disagreement aborts.
std::vector<std::vector<VertexId>> oracle_blocks(const Digraph& g);

struct OracleDomTree {
    VertexId s = kNoVertex;
    std::vector<char> reachable;
    std::vector<VertexId> parent;  // kNoVertex for s and unreachable vertices
    std::vector<int> depth;        // 0 at s, -1 unreachable
    std::vector<char> is_bridge;   // edge (parent[v], v) exists and every path from s to v uses it
    std::vector<VertexId> root;    // nearest ancestor (inclusive) that is s or a bridge head
};

// Dominator tree by iterated set intersection over in-neighbors.
OracleDomTree oracle_dominator_tree(const FlowView& fv, VertexId s);

}  // namespace twoec
