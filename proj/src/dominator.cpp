#include "twoec/dominator.hpp"

#include <algorithm>

#include "twoec/check.hpp"

namespace twoec {

namespace {

struct DfsFrame {
    VertexId v;
    int arc;
};

}  // namespace

void DominatorState::attach(FlowView fv, VertexId s) {
    fv_ = fv;
    s_ = s;
    const int n = fv.vertex_count();
    parent_.assign(n + 1, kNoVertex);
    depth_.assign(n + 1, -1);
    pre_.assign(n + 1, 0);
    size_.assign(n + 1, 0);
    by_pre_.assign(n + 2, kNoVertex);
    bridge_.assign(n + 1, 0);
    root_.assign(n + 1, kNoVertex);
    b_val_.assign(n + 1, 0);
    b_epoch_.assign(n + 1, 0);
    expanded_epoch_.assign(n + 1, 0);
    tmp_index_.assign(n + 1, -1);
    epoch_ = 0;
    k_ = 0;
}

void DominatorState::finish_from_parents() {
    const int n = fv_.vertex_count();
    depth_[s_] = 0;

    std::vector<std::vector<VertexId>> kids(n + 1);
    for (VertexId v = 1; v <= n; ++v) {
        if (parent_[v] != kNoVertex) kids[parent_[v]].push_back(v);
    }

    int next = 1;
    std::vector<DfsFrame> stack;
    pre_[s_] = next++;
    by_pre_[pre_[s_]] = s_;
    stack.push_back({s_, 0});
    while (!stack.empty()) {
        auto& fr = stack.back();
        auto& ks = kids[fr.v];
        if (fr.arc < static_cast<int>(ks.size())) {
            VertexId c = ks[fr.arc++];
            depth_[c] = depth_[fr.v] + 1;
            pre_[c] = next++;
            by_pre_[pre_[c]] = c;
            stack.push_back({c, 0});
        } else {
            size_[fr.v] = next - pre_[fr.v];
            stack.pop_back();
        }
    }
    k_ = next - 1;

    // (parent(v), v) is a bridge exactly when every edge entering v comes
    // from v's own subtree or from the parent itself
    for (int i = 2; i <= k_; ++i) {
        VertexId v = by_pre_[i];
        char br = 1;
        for (auto [u, e] : fv_.in(v)) {
            if (pre_[u] == 0) continue;
            if (u == parent_[v] || is_ancestor(v, u)) continue;
            br = 0;
            break;
        }
        bridge_[v] = br;
    }

    root_[s_] = s_;
    for (int i = 2; i <= k_; ++i) {
        VertexId v = by_pre_[i];
        root_[v] = bridge_[v] ? v : root_[parent_[v]];
    }
}

DominatorState compute_dominator_state(FlowView fv, VertexId s) {
    DominatorState st;
    st.attach(fv, s);
    const int n = fv.vertex_count();

    std::vector<int> pnum(n + 1, 0);
    std::vector<VertexId> vertex_of(n + 1, kNoVertex);
    std::vector<int> dpar(n + 1, 0);
    std::vector<DfsFrame> stack;
    int k = 0;
    pnum[s] = ++k;
    vertex_of[k] = s;
    stack.push_back({s, 0});
    while (!stack.empty()) {
        auto& fr = stack.back();
        const auto& arcs = fv.out(fr.v);
        if (fr.arc < static_cast<int>(arcs.size())) {
            VertexId w = arcs[fr.arc++].to;
            if (!pnum[w]) {
                pnum[w] = ++k;
                vertex_of[k] = w;
                dpar[k] = pnum[fr.v];
                stack.push_back({w, 0});
            }
        } else {
            stack.pop_back();
        }
    }

    // semidominator pass with path compression over the spanning tree, then
    // the usual corrective sweep to immediate dominators
    std::vector<int> anc(dpar);
    std::vector<int> semi(k + 1), label(k + 1), idom(k + 1, 0);
    for (int i = 1; i <= k; ++i) semi[i] = label[i] = i;
    std::vector<int> chain;
    auto compress_to = [&](int v, int limit) {
        chain.clear();
        int x = v;
        while (anc[x] > limit) {
            chain.push_back(x);
            x = anc[x];
        }
        for (int idx = static_cast<int>(chain.size()) - 1; idx >= 0; --idx) {
            int y = chain[idx];
            if (label[anc[y]] < label[y]) label[y] = label[anc[y]];
            anc[y] = x;
        }
    };
    for (int i = k; i >= 2; --i) {
        for (auto [u, e] : fv.in(vertex_of[i])) {
            int j = pnum[u];
            if (j == 0) continue;
            int c;
            if (j < i) {
                c = j;
            } else {
                compress_to(j, i);
                c = label[j];
            }
            if (c < semi[i]) semi[i] = c;
        }
        label[i] = semi[i];
    }
    idom[1] = 1;
    for (int i = 2; i <= k; ++i) {
        int d = dpar[i];
        while (d > semi[i]) d = idom[d];
        idom[i] = d;
    }

    for (int i = 2; i <= k; ++i) st.parent_[vertex_of[i]] = vertex_of[idom[i]];
    st.finish_from_parents();
    return st;
}

DominatorState compute_dominator_tree_simple(FlowView fv, VertexId s) {
    DominatorState st;
    st.attach(fv, s);
    const int n = fv.vertex_count();

    std::vector<char> seen(n + 1, 0);
    std::vector<VertexId> post;
    std::vector<DfsFrame> stack;
    seen[s] = 1;
    stack.push_back({s, 0});
    while (!stack.empty()) {
        auto& fr = stack.back();
        const auto& arcs = fv.out(fr.v);
        if (fr.arc < static_cast<int>(arcs.size())) {
            VertexId w = arcs[fr.arc++].to;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back({w, 0});
            }
        } else {
            post.push_back(fr.v);
            stack.pop_back();
        }
    }

    std::vector<VertexId> rpo(post.rbegin(), post.rend());
    std::vector<int> ridx(n + 1, -1);
    for (int i = 0; i < static_cast<int>(rpo.size()); ++i) ridx[rpo[i]] = i;

    std::vector<VertexId> idom(n + 1, kNoVertex);
    idom[s] = s;
    auto intersect = [&](VertexId a, VertexId b) {
        while (a != b) {
            while (ridx[a] > ridx[b]) a = idom[a];
            while (ridx[b] > ridx[a]) b = idom[b];
        }
        return a;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v : rpo) {
            if (v == s) continue;
            VertexId best = kNoVertex;
            for (auto [u, e] : fv.in(v)) {
                if (!seen[u] || idom[u] == kNoVertex) continue;
                best = (best == kNoVertex) ? u : intersect(best, u);
            }
            if (best != kNoVertex && idom[v] != best) {
                idom[v] = best;
                changed = true;
            }
        }
    }

    for (VertexId v = 1; v <= n; ++v) {
        if (v != s && seen[v]) st.parent_[v] = idom[v];
    }
    st.finish_from_parents();
    return st;
}

bool same_dominator_tree(const DominatorState& a, const DominatorState& b) {
    return a.parents() == b.parents() && a.depths() == b.depths() &&
           a.bridges() == b.bridges() && a.roots() == b.roots() && a.pres() == b.pres() &&
           a.sizes() == b.sizes();
}

VertexId DominatorState::nca(VertexId u, VertexId v) const {
    while (u != v) {
        if (depth_[u] > depth_[v]) {
            u = parent_[u];
        } else if (depth_[v] > depth_[u]) {
            v = parent_[v];
        } else {
            u = parent_[u];
            v = parent_[v];
        }
    }
    return u;
}

InsertionReport DominatorState::apply_insertion(VertexId x, VertexId y) {
    TWOEC_CHECK(is_reachable(x) && is_reachable(y));
    InsertionReport rep;
    VertexId z = nca(x, y);
    rep.nca = z;
    if (z == y) return rep;  // new head already dominates the tail side

    const int dz = depth_[z];
    const int top_b = depth_[y];

    // Bottleneck values: b(v) = over all paths from y to v, the best
    // achievable minimum depth; only values above dz are of interest, and
    // out-edges are worth following only while the value can stay >= dz + 2.
    ++epoch_;
    std::vector<std::vector<VertexId>> buckets(top_b - dz);
    std::vector<VertexId> recorded;
    auto record = [&](VertexId w, int bb) {
        b_val_[w] = bb;
        if (b_epoch_[w] != epoch_) {
            b_epoch_[w] = epoch_;
            recorded.push_back(w);
        }
        buckets[bb - dz - 1].push_back(w);
    };
    record(y, top_b);
    for (int lvl = top_b; lvl >= dz + 2; --lvl) {
        auto& bucket = buckets[lvl - dz - 1];
        while (!bucket.empty()) {
            VertexId v = bucket.back();
            bucket.pop_back();
            if (b_val_[v] != lvl || expanded_epoch_[v] == epoch_) continue;
            expanded_epoch_[v] = epoch_;
            rep.scanned.push_back(v);
            for (auto [w, e] : fv_.out(v)) {
                int cand = std::min(lvl, depth_[w]);
                if (cand <= dz) continue;
                if (b_epoch_[w] != epoch_ || cand > b_val_[w]) record(w, cand);
            }
        }
    }
    std::sort(rep.scanned.begin(), rep.scanned.end());
    rep.scanned_old_root.reserve(rep.scanned.size());
    for (VertexId v : rep.scanned) rep.scanned_old_root.push_back(root_[v]);

    std::vector<VertexId> canceled_heads;
    for (VertexId v : recorded) {
        VertexId dv = parent_[v];
        const int ddv = depth_[dv];
        if (b_val_[v] <= ddv) continue;
        if (dz < ddv) rep.affected.push_back(v);
        if (bridge_[v] && dz <= ddv) {
            canceled_heads.push_back(v);
            if (ddv == dz) {
                rep.locally_canceled = true;
                TWOEC_CHECK(dv == z);
            }
        }
    }
    std::sort(rep.affected.begin(), rep.affected.end());
    std::sort(canceled_heads.begin(), canceled_heads.end());
    for (VertexId h : canceled_heads) {
        rep.canceled.emplace_back(parent_[h], h);
        TWOEC_CHECK(is_ancestor(h, y));
    }
    for (VertexId v : rep.affected) TWOEC_CHECK(expanded_epoch_[v] == epoch_);

    if (rep.affected.empty() && canceled_heads.empty()) return rep;

    // first bridge on the old tree path from z toward y, and the old roots
    // strictly between r_z and y (needed to sanity-check movements below)
    const VertexId rz = root_[z];
    std::vector<VertexId> old_chain;
    for (VertexId c = root_[y]; c != rz;) {
        old_chain.push_back(c);
        VertexId up = root_[parent_[c]];
        if (up == rz) {
            rep.bridge_p = parent_[c];
            rep.bridge_q = c;
            break;
        }
        c = up;
    }

    // mutate: re-attach affected vertices, drop canceled bridges, then redo
    // the subtree of z in place (its member set is unchanged, so its preorder
    // interval is reusable); fall back to the whole tree once the subtree
    // covers most of it
    VertexId top = (2 * size_[z] > k_) ? s_ : z;
    const int lo = pre_[top];
    const int hi = lo + size_[top];
    std::vector<VertexId> members(by_pre_.begin() + lo, by_pre_.begin() + hi);
    std::vector<VertexId> old_root(members.size());
    std::vector<int> old_depth(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        old_root[i] = root_[members[i]];
        old_depth[i] = depth_[members[i]];
    }

    for (VertexId v : rep.affected) parent_[v] = z;
    for (VertexId h : canceled_heads) bridge_[h] = 0;

    std::vector<VertexId> sorted_members(members);
    std::sort(sorted_members.begin(), sorted_members.end());
    std::vector<std::vector<VertexId>> kids(members.size());
    for (int i = 0; i < static_cast<int>(sorted_members.size()); ++i) {
        tmp_index_[sorted_members[i]] = i;
    }
    for (VertexId v : sorted_members) {
        if (v == top) continue;
        TWOEC_CHECK(tmp_index_[parent_[v]] >= 0);
        kids[tmp_index_[parent_[v]]].push_back(v);
    }

    int next = lo;
    std::vector<DfsFrame> stack;
    pre_[top] = next++;
    by_pre_[pre_[top]] = top;
    stack.push_back({top, 0});
    while (!stack.empty()) {
        auto& fr = stack.back();
        auto& ks = kids[tmp_index_[fr.v]];
        if (fr.arc < static_cast<int>(ks.size())) {
            VertexId c = ks[fr.arc++];
            depth_[c] = depth_[fr.v] + 1;
            root_[c] = bridge_[c] ? c : root_[fr.v];
            pre_[c] = next++;
            by_pre_[pre_[c]] = c;
            stack.push_back({c, 0});
        } else {
            size_[fr.v] = next - pre_[fr.v];
            stack.pop_back();
        }
    }
    TWOEC_CHECK(next == hi);

    for (size_t i = 0; i < members.size(); ++i) {
        VertexId v = members[i];
        TWOEC_CHECK(depth_[v] <= old_depth[i]);
        if (root_[v] != old_root[i]) {
            TWOEC_CHECK(root_[v] == rz);
            // when the cancellation is local, untouched subtrees can change
            // root without having been reached by the search
            if (!rep.locally_canceled) TWOEC_CHECK(expanded_epoch_[v] == epoch_);
            TWOEC_CHECK(std::find(old_chain.begin(), old_chain.end(), old_root[i]) !=
                        old_chain.end());
            rep.moved.push_back(v);
        }
        tmp_index_[v] = -1;
    }
    std::sort(rep.moved.begin(), rep.moved.end());
    if (!rep.moved.empty()) TWOEC_CHECK(rep.bridge_q != kNoVertex);

    return rep;
}

}  // namespace twoec
