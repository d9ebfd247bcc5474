#pragma once

#include <vector>

#include "twoec/dominator.hpp"

namespace twoec {

// Nearest ancestor of v whose root is r. v must be r or one of its
// descendants. Climbs root-to-parent links, so the cost is the number of
// bridge heads strictly between v and the result.
VertexId nearest_ancestor_in(const DominatorState& st, VertexId v, VertexId r);

// One edge of an auxiliary graph. tail and head share a root; origin is the
// graph edge the record stands for. A graph edge yields at most one of these.
struct AuxEdge {
    VertexId tail;
    VertexId head;
    EdgeId origin;
};

// Projects every edge of the state's view into the auxiliary graph of its
// head's root: kept as-is when both endpoints already share that root,
// re-tailed to the tail's nearest ancestor in that root's group when the tail
// sits deeper, dropped when the tail lies outside the head's subtree (only
// possible when the head is the root itself) or when re-tailing collapses the
// edge to a loop.
std::vector<AuxEdge> build_aux_edges(const DominatorState& st);

// Strongly connected components of all auxiliary graphs at once. Edges never
// cross roots, so one pass covers every graph.
struct AuxComponents {
    // Smallest vertex of v's component; kNoVertex for unreachable v.
    std::vector<VertexId> canon;
    // Distinct roots, ascending.
    std::vector<VertexId> roots;
    // Component canonicals per root, topologically ordered: the tail side of
    // every cross-component edge comes before its head side.
    std::vector<std::vector<VertexId>> order;
};

AuxComponents aux_components(const DominatorState& st, const std::vector<AuxEdge>& edges);

}  // namespace twoec
