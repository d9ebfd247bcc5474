#include "twoec/blocks.hpp"

#include <algorithm>

#include "twoec/check.hpp"
#include "twoec/oracle.hpp"

namespace twoec {

ScBlockState::ScBlockState(SccEngine engine, const Digraph& global,
                           const std::vector<VertexId>& members, VertexId global_start)
    : engine_(engine), local_(0) {
    auto [sub, map] = induced_subgraph(global, members);
    local_ = std::move(sub);
    l2g_ = std::move(map);
    g2l_.reserve(l2g_.size() * 2);
    for (VertexId lv = 1; lv < static_cast<VertexId>(l2g_.size()); ++lv) g2l_[l2g_[lv]] = lv;
    s_ = local_of(global_start);
    TWOEC_CHECK(s_ != kNoVertex);

    const int n = local_.vertex_count();
    scans_fwd_.assign(n + 1, 0);
    scans_rev_.assign(n + 1, 0);
    mark_scanned_.assign(n + 1, 0);
    mark_moved_.assign(n + 1, 0);
    mark_h_.assign(n + 1, 0);
    hpos_.assign(n + 1, -1);
    edge_seen_.assign(local_.edge_count(), 0);

    build_side(fwd_, false);
    build_side(rev_, true);
    TWOEC_CHECK(fwd_.dom.reachable_count() == n);
    TWOEC_CHECK(rev_.dom.reachable_count() == n);
    collect_ever_bridges();
}

VertexId ScBlockState::local_of(VertexId gv) const {
    auto it = g2l_.find(gv);
    return it == g2l_.end() ? kNoVertex : it->second;
}

void ScBlockState::build_side(Side& side, bool reversed) {
    side.dom = compute_dominator_state(FlowView{&local_, reversed}, s_);
    auto edges = build_aux_edges(side.dom);
    auto comps = aux_components(side.dom, edges);

    side.scc = std::make_unique<IncSccState>(engine_, local_.vertex_count(),
                                             local_.edge_count(), local_.vertex_count());
    for (VertexId v = 1; v <= local_.vertex_count(); ++v)
        if (comps.canon[v] != kNoVertex && comps.canon[v] != v) side.scc->unite(comps.canon[v], v);
    for (size_t i = 0; i < comps.roots.size(); ++i)
        side.scc->init_group(comps.roots[i], comps.order[i]);
    for (const AuxEdge& ae : edges)
        if (side.scc->find(ae.tail) != side.scc->find(ae.head))
            side.scc->add_record(ae.tail, ae.head, ae.origin);
}

void ScBlockState::reinit() {
    ++counters_.reinits;
    build_side(fwd_, false);
    build_side(rev_, true);
    collect_ever_bridges();
}

void ScBlockState::collect_ever_bridges() {
    for (VertexId v = 1; v <= local_.vertex_count(); ++v) {
        if (fwd_.dom.bridge(v)) {
            TWOEC_CHECK(fwd_.dom.parent(v) != kNoVertex);
            ever_bridges_.insert({l2g_[fwd_.dom.parent(v)], l2g_[v]});
        }
        if (rev_.dom.bridge(v)) {
            TWOEC_CHECK(rev_.dom.parent(v) != kNoVertex);
            ever_bridges_.insert({l2g_[v], l2g_[rev_.dom.parent(v)]});
        }
    }
}

void ScBlockState::insert_edge(VertexId gu, VertexId gv) {
    VertexId lu = local_of(gu), lv = local_of(gv);
    TWOEC_CHECK(lu != kNoVertex && lv != kNoVertex && lu != lv);
    EdgeId e = local_.add_edge(lu, lv);
    if (e == kNoEdge) return;
    ++counters_.insertions;
    if (static_cast<EdgeId>(edge_seen_.size()) < local_.edge_count())
        edge_seen_.resize(local_.edge_count(), 0);

    InsertionReport rf = fwd_.dom.apply_insertion(lu, lv);
    for (VertexId v : rf.scanned) ++scans_fwd_[v];
    if (rf.locally_canceled) {
        reinit();
        return;
    }
    InsertionReport rr = rev_.dom.apply_insertion(lv, lu);
    for (VertexId v : rr.scanned) ++scans_rev_[v];
    if (rr.locally_canceled) {
        reinit();
        return;
    }
    update_ac(fwd_, rf, lu, lv, e);
    update_ac(rev_, rr, lv, lu, e);
}

void ScBlockState::update_ac(Side& side, const InsertionReport& rep, VertexId lx, VertexId ly,
                             EdgeId eid) {
    const DominatorState& st = side.dom;
    IncSccState& scc = *side.scc;
    const VertexId rz = st.root(rep.nca);

    const unsigned ep = ++epoch_;
    for (VertexId v : rep.scanned) mark_scanned_[v] = ep;
    for (VertexId v : rep.moved) mark_moved_[v] = ep;

    bool admitted = false;
    if (!rep.moved.empty()) {
        // Everything that joined rz's group came through the first bridge of
        // the old path from the meeting point, so that bridge's tail
        // component is where merged components attach.
        TWOEC_CHECK(rep.bridge_p != kNoVertex);
        const VertexId cp = scc.find(rep.bridge_p);

        // Subgraph of scanned vertices that sat outside rz's group. Its
        // strongly connected components are unions of old components; the
        // ones with a surviving edge into cp's component (directly or through
        // other scanned vertices) are now strongly connected with it.
        std::vector<VertexId> hv;
        for (size_t i = 0; i < rep.scanned.size(); ++i) {
            if (rep.scanned_old_root[i] != rz) {
                VertexId v = rep.scanned[i];
                hpos_[v] = static_cast<int>(hv.size());
                mark_h_[v] = ep;
                hv.push_back(v);
            }
        }
        const int hn = static_cast<int>(hv.size());
        std::vector<std::vector<int>> hadj(hn);
        std::vector<char> exit_to_cp(hn, 0);
        for (int i = 0; i < hn; ++i) {
            for (const Arc& a : st.view().out(hv[i])) {
                if (mark_h_[a.to] == ep) {
                    hadj[i].push_back(hpos_[a.to]);
                } else if (mark_moved_[a.to] != ep && st.root(a.to) == rz &&
                           scc.find(a.to) == cp) {
                    exit_to_cp[i] = 1;
                }
            }
        }

        // Tarjan; components pop with all successors already emitted.
        std::vector<int> num(hn, 0), low(hn, 0), compid(hn, -1);
        std::vector<int> tstk;
        std::vector<char> onstk(hn, 0);
        std::vector<std::vector<int>> hcomp;
        struct Frame {
            int v;
            size_t ai;
        };
        std::vector<Frame> fstk;
        int timer = 0;
        for (int s0 = 0; s0 < hn; ++s0) {
            if (num[s0]) continue;
            fstk.push_back({s0, 0});
            while (!fstk.empty()) {
                Frame& fr = fstk.back();
                int v = fr.v;
                if (fr.ai == 0) {
                    num[v] = low[v] = ++timer;
                    tstk.push_back(v);
                    onstk[v] = 1;
                }
                if (fr.ai < hadj[v].size()) {
                    int w = hadj[v][fr.ai++];
                    if (!num[w])
                        fstk.push_back({w, 0});
                    else if (onstk[w])
                        low[v] = std::min(low[v], num[w]);
                } else {
                    if (low[v] == num[v]) {
                        hcomp.emplace_back();
                        for (;;) {
                            int w = tstk.back();
                            tstk.pop_back();
                            onstk[w] = 0;
                            compid[w] = static_cast<int>(hcomp.size()) - 1;
                            hcomp.back().push_back(w);
                            if (w == v) break;
                        }
                    }
                    fstk.pop_back();
                    if (!fstk.empty()) low[fstk.back().v] = std::min(low[fstk.back().v], low[v]);
                }
            }
        }

        std::vector<char> reach(hcomp.size(), 0);
        for (size_t c = 0; c < hcomp.size(); ++c)
            for (int i : hcomp[c]) {
                if (exit_to_cp[i]) reach[c] = 1;
                for (int j : hadj[i])
                    if (compid[j] != static_cast<int>(c) && reach[compid[j]]) reach[c] = 1;
            }

        // Old components relocate as wholes, but one subgraph component can
        // also pass through vertices of groups that survived (a kept bridge
        // below a canceled one); those stay where they are and only certify
        // connectivity for the relocated ones.
        VertexId cursor = cp;
        std::vector<VertexId> cans;
        for (int c = static_cast<int>(hcomp.size()) - 1; c >= 0; --c) {
            cans.clear();
            for (int i : hcomp[c]) {
                if (mark_moved_[hv[i]] != ep) continue;
                VertexId oc = scc.find(hv[i]);
                TWOEC_CHECK(oc != cp);
                if (std::find(cans.begin(), cans.end(), oc) == cans.end()) cans.push_back(oc);
            }
            if (cans.empty()) continue;
            if (reach[c]) {
                for (VertexId oc : cans) {
                    scc.evict(scc.group_of(oc), oc);
                    scc.unite(cp, oc);
                    ++counters_.unites;
                }
            } else {
                // not reattached to cp's component: keep it separate and slot
                // it into rz's order right after the previous one, preserving
                // a topological order of the relocated subgraph
                VertexId surv = *std::min_element(cans.begin(), cans.end());
                for (VertexId oc : cans) scc.evict(scc.group_of(oc), oc);
                for (VertexId oc : cans)
                    if (oc != surv) {
                        scc.unite(surv, oc);
                        ++counters_.unites;
                    }
                scc.admit_after(rz, surv, cursor);
                cursor = surv;
                admitted = true;
            }
        }
    }

    // Recompute the condensation record of every edge touching a scanned
    // vertex against the new tree. In-edges can only change placement when
    // their head switched group, i.e. for moved heads. Edges whose tail
    // cannot reach the head's group from inside (bridges, or heads in a
    // sibling branch) carry no record.
    auto rewire = [&](EdgeId e) {
        if (edge_seen_[e] == ep) return;
        edge_seen_[e] = ep;
        auto [t, h] = st.view().edge(e);
        if (scc.has_record(e)) scc.remove_record(e);
        VertexId r = st.root(h);
        VertexId tt;
        if (st.root(t) == r)
            tt = t;
        else if (st.is_ancestor(r, t))
            tt = nearest_ancestor_in(st, t, r);
        else
            return;
        if (scc.find(tt) == scc.find(h)) return;
        scc.add_record(tt, h, e);
    };
    for (VertexId v : rep.scanned) {
        for (const Arc& a : st.view().out(v))
            if (a.eid != eid) rewire(a.eid);
        if (mark_moved_[v] == ep)
            for (const Arc& a : st.view().in(v))
                if (a.eid != eid) rewire(a.eid);
    }

    if (admitted) scc.rebuild_ranks(rz);

    TWOEC_CHECK(st.root(ly) == rz);
    VertexId xp = st.root(lx) == rz ? lx : nearest_ancestor_in(st, lx, rz);
    scc.insert_edge(rz, xp, ly, eid);
}

bool ScBlockState::two_edge_connected(VertexId lu, VertexId lv, int* reads) const {
    *reads += 2;
    if (fwd_.dom.root(lu) != fwd_.dom.root(lv)) return false;
    *reads += 2;
    if (fwd_.scc->find(lu) != fwd_.scc->find(lv)) return false;
    *reads += 2;
    if (rev_.dom.root(lu) != rev_.dom.root(lv)) return false;
    *reads += 2;
    return rev_.scc->find(lu) == rev_.scc->find(lv);
}

std::pair<VertexId, VertexId> ScBlockState::separating_edge(VertexId lu, VertexId lv) const {
    const DominatorState& df = fwd_.dom;
    VertexId ru = df.root(lu), rv = df.root(lv);
    if (ru != rv) {
        // the deeper of the two group entries is a bridge missed by one side
        VertexId rt = df.is_ancestor(rv, ru) ? ru : rv;
        TWOEC_CHECK(rt != s_);
        return {l2g_[df.parent(rt)], l2g_[rt]};
    }
    if (fwd_.scc->find(lu) != fwd_.scc->find(lv)) {
        TWOEC_CHECK(ru != s_);
        return {l2g_[df.parent(ru)], l2g_[ru]};
    }
    const DominatorState& dr = rev_.dom;
    VertexId su = dr.root(lu), sv = dr.root(lv);
    if (su != sv) {
        VertexId rt = dr.is_ancestor(sv, su) ? su : sv;
        TWOEC_CHECK(rt != s_);
        return {l2g_[rt], l2g_[dr.parent(rt)]};
    }
    TWOEC_CHECK(rev_.scc->find(lu) != rev_.scc->find(lv));
    TWOEC_CHECK(su != s_);
    return {l2g_[su], l2g_[dr.parent(su)]};
}

std::vector<std::pair<VertexId, VertexId>> ScBlockState::strong_bridges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId v = 1; v <= local_.vertex_count(); ++v) {
        if (fwd_.dom.bridge(v)) out.push_back({l2g_[fwd_.dom.parent(v)], l2g_[v]});
        if (rev_.dom.bridge(v)) out.push_back({l2g_[v], l2g_[rev_.dom.parent(v)]});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::vector<VertexId>> ScBlockState::blocks() const {
    const int n = local_.vertex_count();
    const unsigned long long base = static_cast<unsigned long long>(n) + 1;
    std::unordered_map<unsigned long long, int> idx;
    std::vector<std::vector<VertexId>> out;
    for (VertexId v = 1; v <= n; ++v) {
        unsigned long long key = fwd_.dom.root(v);
        key = key * base + fwd_.scc->find(v);
        key = key * base + rev_.dom.root(v);
        key = key * base + rev_.scc->find(v);
        auto [it, fresh] = idx.try_emplace(key, static_cast<int>(out.size()));
        if (fresh) out.emplace_back();
        out[it->second].push_back(l2g_[v]);
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                  return a.front() < b.front();
              });
    return out;
}

void ScBlockState::validate() const {
    fwd_.scc->validate();
    rev_.scc->validate();
}

TwoEcIndex::TwoEcIndex(int n, SccEngine engine)
    : g_(n), engine_(engine), top_(SccEngine::OneWay, n, 0, n) {
    retired_scans_.assign(n + 1, 0);
    if (n >= 1) {
        std::vector<VertexId> all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        top_.init_group(1, all);
    }
}

bool TwoEcIndex::insert_edge(VertexId u, VertexId v) {
    const int n = g_.vertex_count();
    TWOEC_CHECK(1 <= u && u <= n && 1 <= v && v <= n);
    EdgeId e = g_.add_edge(u, v);
    if (e == kNoEdge) return false;

    VertexId cu = top_.find(u), cv = top_.find(v);
    if (cu == cv) {
        auto it = per_scc_.find(cu);
        TWOEC_CHECK(it != per_scc_.end());
        ScBlockState& st = *it->second;
        st.insert_edge(u, v);
        if (st.counters().reinits != absorbed_reinits_[cu]) {
            absorbed_reinits_[cu] = st.counters().reinits;
            absorb_ever_bridges(st);
        }
        return true;
    }

    MergeReport mr = top_.insert_edge(1, u, v, e);
    if (!mr.merged()) return true;

    // Some SCCs collapsed into one. Rebuild the block machinery around the
    // start vertex of the largest previous component.
    VertexId best = kNoVertex;
    int best_sz = 0;
    for (auto [c, sz] : mr.constituents)
        if (sz > best_sz || (sz == best_sz && (best == kNoVertex || c < best))) {
            best = c;
            best_sz = sz;
        }
    VertexId start = best;
    if (best_sz >= 2) start = per_scc_.at(best)->global_start();
    for (auto [c, sz] : mr.constituents) {
        auto it = per_scc_.find(c);
        if (it != per_scc_.end()) {
            retire_state(*it->second);
            per_scc_.erase(it);
            absorbed_reinits_.erase(c);
        }
    }
    std::vector<VertexId> members = top_.members(mr.survivor);
    std::sort(members.begin(), members.end());
    auto st = std::make_unique<ScBlockState>(engine_, g_, members, start);
    absorb_ever_bridges(*st);
    absorbed_reinits_[mr.survivor] = st->counters().reinits;
    per_scc_[mr.survivor] = std::move(st);
    return true;
}

bool TwoEcIndex::two_edge_connected(VertexId u, VertexId v) {
    reads_ = 0;
    if (u == v) return true;
    VertexId cu = top_.find(u);
    VertexId cv = top_.find(v);
    reads_ += 2;
    if (cu != cv) return false;
    const ScBlockState& st = *per_scc_.at(cu);
    VertexId lu = st.local_of(u);
    VertexId lv = st.local_of(v);
    reads_ += 2;
    return st.two_edge_connected(lu, lv, &reads_);
}

Separation TwoEcIndex::separating_edge(VertexId u, VertexId v) {
    Separation out;
    if (u == v) {
        out.two_ec = true;
        out.same_scc = true;
        return out;
    }
    if (top_.find(u) != top_.find(v)) return out;
    out.same_scc = true;
    const ScBlockState& st = *per_scc_.at(top_.find(u));
    VertexId lu = st.local_of(u), lv = st.local_of(v);
    int reads = 0;
    if (st.two_edge_connected(lu, lv, &reads)) {
        out.two_ec = true;
        return out;
    }
    auto [a, b] = st.separating_edge(lu, lv);
    out.a = a;
    out.b = b;
    return out;
}

std::vector<std::vector<VertexId>> TwoEcIndex::blocks() {
    std::vector<char> covered(g_.vertex_count() + 1, 0);
    std::vector<std::vector<VertexId>> out;
    for (auto& [c, st] : per_scc_)
        for (auto& b : st->blocks()) {
            for (VertexId v : b) covered[v] = 1;
            out.push_back(std::move(b));
        }
    for (VertexId v = 1; v <= g_.vertex_count(); ++v)
        if (!covered[v]) out.push_back({v});
    std::sort(out.begin(), out.end(),
              [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                  return a.front() < b.front();
              });
    return out;
}

std::vector<std::pair<VertexId, VertexId>> TwoEcIndex::strong_bridges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [c, st] : per_scc_) {
        auto part = st->strong_bridges();
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long TwoEcIndex::total_reinits() const {
    long long total = retired_reinits_;
    for (const auto& [c, st] : per_scc_) total += st->counters().reinits;
    return total;
}

long long TwoEcIndex::total_unites() const {
    long long total = retired_unites_;
    for (const auto& [c, st] : per_scc_) total += st->counters().unites;
    return total;
}

long long TwoEcIndex::total_scan_events() const {
    long long total = 0;
    for (long long s : retired_scans_) total += s;
    for (const auto& [c, st] : per_scc_) {
        for (long long s : st->scan_counts(false)) total += s;
        for (long long s : st->scan_counts(true)) total += s;
    }
    return total;
}

const ScBlockState* TwoEcIndex::component_of(VertexId v) const {
    auto it = per_scc_.find(top_.find(v));
    return it == per_scc_.end() ? nullptr : it->second.get();
}

std::vector<const ScBlockState*> TwoEcIndex::components() const {
    std::vector<const ScBlockState*> out;
    out.reserve(per_scc_.size());
    for (const auto& [c, st] : per_scc_) out.push_back(st.get());
    return out;
}

void TwoEcIndex::validate() const {
    top_.validate();
    for (const auto& [c, st] : per_scc_) st->validate();
}

void TwoEcIndex::absorb_ever_bridges(const ScBlockState& st) {
    const auto& eb = st.ever_bridges();
    ever_bridges_.insert(eb.begin(), eb.end());
}

void TwoEcIndex::retire_state(const ScBlockState& st) {
    retired_reinits_ += st.counters().reinits;
    retired_unites_ += st.counters().unites;
    const auto& l2g = st.locals_to_globals();
    const auto& sf = st.scan_counts(false);
    const auto& sr = st.scan_counts(true);
    for (size_t lv = 1; lv < l2g.size(); ++lv) retired_scans_[l2g[lv]] += sf[lv] + sr[lv];
    absorb_ever_bridges(st);
}

std::vector<std::vector<VertexId>> static_blocks_partition(const Digraph& g) {
    const int n = g.vertex_count();
    SccPartition p = scc_ids(g);
    std::vector<std::vector<VertexId>> bucket(p.count + 1);
    for (VertexId v = 1; v <= n; ++v) bucket[p.comp[v]].push_back(v);

    std::vector<std::vector<VertexId>> out;
    for (auto& mem : bucket) {
        if (mem.empty()) continue;
        if (mem.size() == 1) {
            out.push_back(mem);
            continue;
        }
        auto [sub, l2g] = induced_subgraph(g, mem);
        DominatorState df = compute_dominator_state(FlowView{&sub, false}, 1);
        DominatorState dr = compute_dominator_state(FlowView{&sub, true}, 1);
        AuxComponents af = aux_components(df, build_aux_edges(df));
        AuxComponents ar = aux_components(dr, build_aux_edges(dr));
        const int k = sub.vertex_count();
        const unsigned long long base = static_cast<unsigned long long>(k) + 1;
        std::unordered_map<unsigned long long, int> idx;
        std::vector<std::vector<VertexId>> local;
        for (VertexId v = 1; v <= k; ++v) {
            unsigned long long key = df.root(v);
            key = key * base + af.canon[v];
            key = key * base + dr.root(v);
            key = key * base + ar.canon[v];
            auto [it, fresh] = idx.try_emplace(key, static_cast<int>(local.size()));
            if (fresh) local.emplace_back();
            local[it->second].push_back(l2g[v]);
        }
        for (auto& b : local) out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
                  return a.front() < b.front();
              });
    return out;
}

}  // namespace twoec
