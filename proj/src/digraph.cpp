#include "twoec/digraph.hpp"

#include <algorithm>
#include <cassert>

namespace twoec {

Digraph::Digraph(int n) : n_(n), out_(n + 1), in_(n + 1) {
    assert(n >= 0);
}

EdgeId Digraph::add_edge(VertexId u, VertexId v) {
    assert(u >= 1 && u <= n_ && v >= 1 && v <= n_);
    if (u == v) return kNoEdge;
    if (!present_.insert(key_of(u, v)).second) return kNoEdge;
    EdgeId e = static_cast<EdgeId>(edges_.size());
    edges_.emplace_back(u, v);
    out_[u].push_back({v, e});
    in_[v].push_back({u, e});
    return e;
}

bool Digraph::has_edge(VertexId u, VertexId v) const {
    return present_.find(key_of(u, v)) != present_.end();
}

Digraph new_graph(int n) {
    return Digraph(n);
}

std::pair<Digraph, std::vector<VertexId>> induced_subgraph(const Digraph& g,
                                                           const std::vector<VertexId>& vertices) {
    std::vector<VertexId> to_global(vertices);
    std::sort(to_global.begin(), to_global.end());
    assert(std::adjacent_find(to_global.begin(), to_global.end()) == to_global.end());

    std::vector<VertexId> to_local(g.vertex_count() + 1, kNoVertex);
    for (int i = 0; i < static_cast<int>(to_global.size()); ++i) {
        to_local[to_global[i]] = i + 1;
    }

    Digraph sub(static_cast<int>(to_global.size()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if (to_local[u] != kNoVertex && to_local[v] != kNoVertex) {
            sub.add_edge(to_local[u], to_local[v]);
        }
    }

    to_global.insert(to_global.begin(), kNoVertex);
    return {std::move(sub), std::move(to_global)};
}

}  // namespace twoec
