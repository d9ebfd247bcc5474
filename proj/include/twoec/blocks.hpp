#pragma once

#include <memory>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twoec/auxiliary.hpp"
#include "twoec/dominator.hpp"
#include "twoec/inc_scc.hpp"

namespace twoec {

// Answer for a pair that is not 2-edge-connected. When the endpoints share an
// SCC, (a, b) is a graph edge whose removal strongly disconnects them; when
// they do not, no single edge is to blame and the fields stay kNoVertex.
struct Separation {
    bool two_ec = false;
    bool same_scc = false;
    VertexId a = kNoVertex;
    VertexId b = kNoVertex;
};

struct ScCounters {
    long long insertions = 0;
    int reinits = 0;
    long long unites = 0;
};

// Block engine for one strongly connected component: a private copy of the
// induced subgraph, a dominator tree per direction from a fixed start, and a
// per-direction incremental SCC structure over the auxiliary graphs of the
// bridge decomposition. Works in local vertex ids 1..k and translates at the
// boundary.
class ScBlockState {
public:
    ScBlockState(SccEngine engine, const Digraph& global,
                 const std::vector<VertexId>& members, VertexId global_start);

    // Both dominator states point into local_, so the object must stay put.
    ScBlockState(const ScBlockState&) = delete;
    ScBlockState& operator=(const ScBlockState&) = delete;

    int size() const { return local_.vertex_count(); }
    const Digraph& local_graph() const { return local_; }
    const std::vector<VertexId>& locals_to_globals() const { return l2g_; }
    VertexId global_start() const { return l2g_[s_]; }
    VertexId local_of(VertexId gv) const;
    VertexId global_of(VertexId lv) const { return l2g_[lv]; }

    // Both endpoints must be members. A parallel copy of a present edge is
    // ignored.
    void insert_edge(VertexId gu, VertexId gv);

    // Pairwise test in local ids; counts its array loads into *reads.
    bool two_edge_connected(VertexId lu, VertexId lv, int* reads) const;

    // Requires a pair that is in this component but not 2-edge-connected;
    // returns a global edge certifying that.
    std::pair<VertexId, VertexId> separating_edge(VertexId lu, VertexId lv) const;

    // Current strong bridges of the component as global edges, lex order.
    std::vector<std::pair<VertexId, VertexId>> strong_bridges() const;

    // 2-edge-connected blocks as global vertex lists, each ascending, ordered
    // by smallest member.
    std::vector<std::vector<VertexId>> blocks() const;

    const ScCounters& counters() const { return counters_; }
    // Every global edge that was a strong bridge at any point of this
    // component's lifetime.
    const std::set<std::pair<VertexId, VertexId>>& ever_bridges() const { return ever_bridges_; }
    // Cumulative search-expansion events per local vertex, one counter per
    // direction.
    const std::vector<long long>& scan_counts(bool reverse) const {
        return reverse ? scans_rev_ : scans_fwd_;
    }

    const DominatorState& dom(bool reverse) const { return reverse ? rev_.dom : fwd_.dom; }
    const IncSccState& scc(bool reverse) const { return reverse ? *rev_.scc : *fwd_.scc; }

    void validate() const;

private:
    struct Side {
        DominatorState dom;
        std::unique_ptr<IncSccState> scc;
    };

    void build_side(Side& side, bool reversed);
    void reinit();
    void collect_ever_bridges();
    void update_ac(Side& side, const InsertionReport& rep, VertexId lx, VertexId ly, EdgeId eid);

    SccEngine engine_;
    Digraph local_;
    std::vector<VertexId> l2g_;
    std::unordered_map<VertexId, VertexId> g2l_;
    VertexId s_ = kNoVertex;
    Side fwd_, rev_;

    ScCounters counters_;
    std::vector<long long> scans_fwd_, scans_rev_;
    std::set<std::pair<VertexId, VertexId>> ever_bridges_;

    // update_ac scratch, epoch stamped
    std::vector<unsigned> mark_scanned_, mark_moved_, mark_h_;
    std::vector<unsigned> edge_seen_;
    std::vector<int> hpos_;
    unsigned epoch_ = 0;
};

// Whole-graph index: maintains the SCC partition with a one-way ordered
// structure and one ScBlockState per nontrivial SCC. The engine choice only
// affects the per-component structures.
class TwoEcIndex {
public:
    explicit TwoEcIndex(int n, SccEngine engine = SccEngine::TwoWay);

    int vertex_count() const { return g_.vertex_count(); }
    const Digraph& graph() const { return g_; }

    // False when the edge is a self-loop or already present.
    bool insert_edge(VertexId u, VertexId v);

    bool two_edge_connected(VertexId u, VertexId v);
    // Array loads performed by the last two_edge_connected call.
    int last_query_reads() const { return reads_; }

    Separation separating_edge(VertexId u, VertexId v);

    // All blocks, ordered by smallest member; singleton SCCs give singleton
    // blocks.
    std::vector<std::vector<VertexId>> blocks();

    std::vector<std::pair<VertexId, VertexId>> strong_bridges() const;

    long long total_reinits() const;
    long long total_unites() const;
    // Sum of per-vertex search-expansion events, retired plus live.
    long long total_scan_events() const;
    // Distinct edges that were strong bridges at any point, over the whole
    // run and all components.
    int ever_bridge_total() const { return static_cast<int>(ever_bridges_.size()); }
    // Search-expansion events per global vertex from components that have
    // since been merged away; live components keep their own counts.
    const std::vector<long long>& retired_scan_totals() const { return retired_scans_; }

    const ScBlockState* component_of(VertexId v) const;
    std::vector<const ScBlockState*> components() const;

    void validate() const;

private:
    void absorb_ever_bridges(const ScBlockState& st);
    void retire_state(const ScBlockState& st);

    Digraph g_;
    SccEngine engine_;
    IncSccState top_;
    std::unordered_map<VertexId, std::unique_ptr<ScBlockState>> per_scc_;
    // reinit count already folded into ever_bridges_, per live component
    std::unordered_map<VertexId, int> absorbed_reinits_;
    std::set<std::pair<VertexId, VertexId>> ever_bridges_;
    std::vector<long long> retired_scans_;
    long long retired_reinits_ = 0;
    long long retired_unites_ = 0;
    int reads_ = 0;
};

// From-scratch block partition of an arbitrary digraph, same output shape as
// TwoEcIndex::blocks. Used as the rebuild baseline in benchmarks.
std::vector<std::vector<VertexId>> static_blocks_partition(const Digraph& g);

}  // namespace twoec
