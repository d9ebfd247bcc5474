#pragma once

#include <utility>
#include <vector>

#include "twoec/digraph.hpp"

namespace twoec {

// Union-find specialised for component contraction: find is one array read,
// unite(p, q) keeps p canonical and relabels q's member list, so a unite costs
// the size of the absorbed set.
class CanonicalDsu {
public:
    void init(int n);

    VertexId find(VertexId v) const { return canon_[v]; }
    int size(VertexId c) const { return size_[c]; }

    // p and q must be distinct canonicals. p stays canonical.
    void unite(VertexId p, VertexId q);

    template <class F>
    void for_members(VertexId c, F&& f) const {
        for (VertexId v = head_[c]; v != kNoVertex; v = next_[v]) f(v);
    }
    std::vector<VertexId> members(VertexId c) const;

private:
    std::vector<VertexId> canon_, head_, tail_, next_;
    std::vector<int> size_;
};

enum class SccEngine { OneWay, TwoWay };

// What one insertion contracted, if anything. constituents lists the
// pre-merge canonicals with the sizes they had; their union is the new
// component, named survivor.
struct MergeReport {
    VertexId survivor = kNoVertex;
    std::vector<std::pair<VertexId, int>> constituents;
    bool merged() const { return survivor != kNoVertex; }
};

// Incremental strongly connected components over a fixed vertex-id space,
// partitioned into independent groups (edges never cross groups). Components
// are tracked by a canonical vertex; a group keeps its component order either
// as an explicit rank list (one-way search) or as pseudo-topological levels
// (two-way bounded search). Condensation edges live in per-canonical record
// lists keyed by the edge that produced them; records whose endpoints fall
// into one component are purged lazily.
class IncSccState {
public:
    // hints size the two-way search budget; they are ignored one-way
    IncSccState(SccEngine engine, int n, int m_hint, int n_hint);

    SccEngine engine() const { return engine_; }
    VertexId find(VertexId v) const { return dsu_.find(v); }
    int component_size(VertexId c) const { return dsu_.size(c); }
    std::vector<VertexId> members(VertexId c) const { return dsu_.members(c); }
    template <class F>
    void for_members(VertexId c, F&& f) const {
        dsu_.for_members(c, std::forward<F>(f));
    }

    // Merges two components without any searching or reordering: the caller
    // owns the order/level bookkeeping through the operations below. p stays.
    void unite(VertexId p, VertexId q);

    // Installs a group whose components are already topologically ordered.
    void init_group(VertexId group, const std::vector<VertexId>& topo_canonicals);

    void evict(VertexId group, VertexId c);
    // One-way: put c right after 'after' in the group's list. Two-way: give c
    // the level of 'after'. 'after' must be in the group.
    void admit_after(VertexId group, VertexId c, VertexId after);
    void rebuild_ranks(VertexId group);

    int rank(VertexId c) const { return rank_[c]; }
    int level(VertexId c) const { return level_[c]; }
    VertexId group_of(VertexId c) const { return owner_[c]; }

    // Condensation edge records, keyed by origin edge id.
    bool has_record(EdgeId origin) const;
    // Original endpoints as recorded; resolve with find() for the current ends.
    std::pair<VertexId, VertexId> record_endpoints(EdgeId origin) const;
    // Links a record without searching (used when rebuilding wiring). Loops
    // are refused. Two-way, an in-link is added when the levels match.
    void add_record(VertexId tail, VertexId head, EdgeId origin);
    void remove_record(EdgeId origin);

    // Full insertion: records the edge, searches, contracts. Both endpoints
    // must belong to the given group.
    MergeReport insert_edge(VertexId group, VertexId tail, VertexId head, EdgeId origin);

    // Test hook: aborts if an order/level invariant or a record is broken.
    void validate() const;

private:
    struct Rec {
        VertexId tail = kNoVertex, head = kNoVertex;
        EdgeId origin = kNoEdge;
        int out_prev = -1, out_next = -1;
        int in_prev = -1, in_next = -1;
        char live = 0, in_linked = 0;
    };

    int ensure_record(VertexId tail, VertexId head, EdgeId origin);
    void out_link(int ri);
    void out_unlink(int ri);
    void in_link(int ri);
    void in_unlink(int ri);
    void drop_record(int ri);

    void list_insert_after(VertexId group, VertexId c, VertexId after);
    void list_evict(VertexId c);
    void list_rename(VertexId oldc, VertexId newc);

    MergeReport insert_oneway(VertexId group, VertexId u, VertexId w, int ri);
    MergeReport insert_twoway(VertexId u, VertexId w, int ri);

    unsigned stamp() { return ++epoch_; }

    SccEngine engine_;
    int n_;
    int delta_;
    CanonicalDsu dsu_;

    // rank list storage (one-way): vertex-indexed links, group-indexed ends
    std::vector<VertexId> next_, prev_, owner_, list_head_, list_tail_;
    std::vector<int> rank_;
    std::vector<int> level_;  // two-way

    std::vector<Rec> pool_;
    std::vector<int> free_recs_;
    std::vector<int> rec_of_origin_;
    std::vector<int> out_head_, out_tail_, in_head_, in_tail_;

    std::vector<VertexId> groups_;

    // epoch-stamped search scratch
    std::vector<unsigned> seen_, bseen_, mseen_;
    std::vector<VertexId> bparent_, fparent_;  // discovering vertex, by its name at the time
    std::vector<int> local_idx_;
    unsigned epoch_ = 0;
};

}  // namespace twoec
