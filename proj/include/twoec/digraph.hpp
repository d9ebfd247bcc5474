#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

namespace twoec {

// Vertices are 1-based so that 0 can mean "none". Edge ids index the
// insertion-ordered edge list.
using VertexId = int;
using EdgeId = int;

inline constexpr VertexId kNoVertex = 0;
inline constexpr EdgeId kNoEdge = -1;

struct Arc {
    VertexId to;
    EdgeId eid;
};

class Digraph {
public:
    explicit Digraph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Returns the new edge id, or kNoEdge for self-loops and duplicates.
    EdgeId add_edge(VertexId u, VertexId v);

    bool has_edge(VertexId u, VertexId v) const;

    const std::vector<Arc>& out(VertexId u) const { return out_[u]; }
    const std::vector<Arc>& in(VertexId v) const { return in_[v]; }

    std::pair<VertexId, VertexId> edge(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

private:
    static std::uint64_t key_of(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }

    int n_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::unordered_set<std::uint64_t> present_;  // membership only, never iterated
};

Digraph new_graph(int n);

// A digraph seen in forward or reverse orientation. Everything that has to run
// on both orientations takes one of these instead of a Digraph.
struct FlowView {
    const Digraph* g = nullptr;
    bool reversed = false;

    int vertex_count() const { return g->vertex_count(); }
    int edge_count() const { return g->edge_count(); }
    const std::vector<Arc>& out(VertexId u) const { return reversed ? g->in(u) : g->out(u); }
    const std::vector<Arc>& in(VertexId v) const { return reversed ? g->out(v) : g->in(v); }
    std::pair<VertexId, VertexId> edge(EdgeId e) const {
        auto [u, v] = g->edge(e);
        if (reversed) return {v, u};
        return {u, v};
    }
};

// Subgraph induced by the given global vertices. Local ids are 1..k in
// ascending global order; edges keep their original relative order. Returns
// the subgraph and the local-to-global vertex map (index 0 unused).
std::pair<Digraph, std::vector<VertexId>> induced_subgraph(const Digraph& g,
                                                           const std::vector<VertexId>& vertices);

}  // namespace twoec
