#pragma once

#include <utility>
#include <vector>

#include "twoec/digraph.hpp"

namespace twoec {

// What a single edge insertion did to one dominator tree. Consumed by the
// aux-component update; also the unit tests pin these fields directly.
struct InsertionReport {
    VertexId nca = kNoVertex;  // meeting point of the new edge's endpoints
    bool locally_canceled = false;

    // Vertices whose parent changed (they all re-attach under nca), ascending.
    std::vector<VertexId> affected;
    // Vertices expanded by the bottleneck search, ascending, with the root
    // each one had before the tree was touched.
    std::vector<VertexId> scanned;
    std::vector<VertexId> scanned_old_root;
    // Vertices whose decomposition root changed (always to nca's root), ascending.
    std::vector<VertexId> moved;
    // Tree edges (parent, head) that stopped being bridges.
    std::vector<std::pair<VertexId, VertexId>> canceled;
    // First bridge on the old tree path from nca toward the new head, if any.
    VertexId bridge_p = kNoVertex;
    VertexId bridge_q = kNoVertex;
};

// Dominator tree of a flow view rooted at a fixed start vertex, maintained
// under edge insertions, together with the bridge flags of the tree edges and
// each vertex's nearest enclosing bridge head ("root"). Unreachable vertices
// carry parent kNoVertex, depth -1, pre 0.
class DominatorState {
public:
    DominatorState() = default;

    VertexId start() const { return s_; }
    FlowView view() const { return fv_; }
    int vertex_count() const { return static_cast<int>(parent_.size()) - 1; }
    int reachable_count() const { return k_; }
    bool is_reachable(VertexId v) const { return pre_[v] != 0; }

    VertexId parent(VertexId v) const { return parent_[v]; }
    int depth(VertexId v) const { return depth_[v]; }
    bool bridge(VertexId v) const { return bridge_[v] != 0; }
    VertexId root(VertexId v) const { return root_[v]; }
    int pre(VertexId v) const { return pre_[v]; }
    int subtree_size(VertexId v) const { return size_[v]; }

    const std::vector<VertexId>& parents() const { return parent_; }
    const std::vector<int>& depths() const { return depth_; }
    const std::vector<char>& bridges() const { return bridge_; }
    const std::vector<VertexId>& roots() const { return root_; }
    const std::vector<int>& pres() const { return pre_; }
    const std::vector<int>& sizes() const { return size_; }
    const std::vector<VertexId>& preorder_sequence() const { return by_pre_; }

    // u an ancestor of v (inclusive) in the tree.
    bool is_ancestor(VertexId u, VertexId v) const {
        return pre_[u] <= pre_[v] && pre_[v] < pre_[u] + size_[u];
    }

    // Nearest common ancestor by parent walk; both must be reachable.
    VertexId nca(VertexId u, VertexId v) const;

    // The view must already contain edge (x, y); both endpoints must be
    // reachable. Restores every tree/bridge/root invariant and reports what
    // changed.
    InsertionReport apply_insertion(VertexId x, VertexId y);

private:
    friend DominatorState compute_dominator_state(FlowView fv, VertexId s);
    friend DominatorState compute_dominator_tree_simple(FlowView fv, VertexId s);

    void attach(FlowView fv, VertexId s);
    void finish_from_parents();

    FlowView fv_{};
    VertexId s_ = kNoVertex;
    int k_ = 0;  // reachable vertices

    std::vector<VertexId> parent_;
    std::vector<int> depth_;
    std::vector<int> pre_;
    std::vector<int> size_;
    std::vector<VertexId> by_pre_;  // preorder position -> vertex, 1-based
    std::vector<char> bridge_;
    std::vector<VertexId> root_;

    // bottleneck-search scratch, epoch stamped so calls don't re-zero
    std::vector<int> b_val_;
    std::vector<unsigned> b_epoch_;
    std::vector<unsigned> expanded_epoch_;
    std::vector<int> tmp_index_;
    unsigned epoch_ = 0;
};

// From-scratch construction (semi-dominator pass plus a corrective sweep).
DominatorState compute_dominator_state(FlowView fv, VertexId s);

// Slow data-flow construction kept around as a differential twin for tests.
DominatorState compute_dominator_tree_simple(FlowView fv, VertexId s);

// Structural equality of parent, depth, bridge, root, and the preorder
// numbering (start vertex and view identity are not compared).
bool same_dominator_tree(const DominatorState& a, const DominatorState& b);

}  // namespace twoec
