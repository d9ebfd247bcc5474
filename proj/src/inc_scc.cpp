#include "twoec/inc_scc.hpp"

#include <algorithm>
#include <cmath>

#include "twoec/check.hpp"

namespace twoec {

void CanonicalDsu::init(int n) {
    canon_.resize(n + 1);
    head_.resize(n + 1);
    tail_.resize(n + 1);
    next_.assign(n + 1, kNoVertex);
    size_.assign(n + 1, 1);
    for (VertexId v = 0; v <= n; ++v) canon_[v] = head_[v] = tail_[v] = v;
}

void CanonicalDsu::unite(VertexId p, VertexId q) {
    TWOEC_CHECK(p != q && canon_[p] == p && canon_[q] == q);
    for (VertexId v = head_[q]; v != kNoVertex; v = next_[v]) canon_[v] = p;
    next_[tail_[p]] = head_[q];
    tail_[p] = tail_[q];
    size_[p] += size_[q];
}

std::vector<VertexId> CanonicalDsu::members(VertexId c) const {
    std::vector<VertexId> out;
    out.reserve(size_[c]);
    for_members(c, [&](VertexId v) { out.push_back(v); });
    return out;
}

IncSccState::IncSccState(SccEngine engine, int n, int m_hint, int n_hint)
    : engine_(engine), n_(n) {
    double d = std::min(std::sqrt(std::max(1.0, double(m_hint))),
                        std::pow(std::max(1.0, double(n_hint)), 2.0 / 3.0));
    delta_ = std::max(1, static_cast<int>(std::ceil(d)));
    dsu_.init(n);
    next_.assign(n + 1, kNoVertex);
    prev_.assign(n + 1, kNoVertex);
    owner_.assign(n + 1, kNoVertex);
    list_head_.assign(n + 1, kNoVertex);
    list_tail_.assign(n + 1, kNoVertex);
    rank_.assign(n + 1, 0);
    level_.assign(n + 1, 0);
    out_head_.assign(n + 1, -1);
    out_tail_.assign(n + 1, -1);
    in_head_.assign(n + 1, -1);
    in_tail_.assign(n + 1, -1);
    seen_.assign(n + 1, 0);
    bseen_.assign(n + 1, 0);
    mseen_.assign(n + 1, 0);
    bparent_.assign(n + 1, kNoVertex);
    fparent_.assign(n + 1, kNoVertex);
    local_idx_.assign(n + 1, -1);
}

// ---- record pool ----

bool IncSccState::has_record(EdgeId origin) const {
    return origin >= 0 && origin < static_cast<EdgeId>(rec_of_origin_.size()) &&
           rec_of_origin_[origin] >= 0;
}

std::pair<VertexId, VertexId> IncSccState::record_endpoints(EdgeId origin) const {
    TWOEC_CHECK(has_record(origin));
    const Rec& r = pool_[rec_of_origin_[origin]];
    return {r.tail, r.head};
}

int IncSccState::ensure_record(VertexId tail, VertexId head, EdgeId origin) {
    if (origin >= static_cast<EdgeId>(rec_of_origin_.size()))
        rec_of_origin_.resize(origin + 1, -1);
    TWOEC_CHECK(rec_of_origin_[origin] < 0);
    int ri;
    if (!free_recs_.empty()) {
        ri = free_recs_.back();
        free_recs_.pop_back();
    } else {
        ri = static_cast<int>(pool_.size());
        pool_.emplace_back();
    }
    Rec& r = pool_[ri];
    r = Rec{};
    r.tail = tail;
    r.head = head;
    r.origin = origin;
    r.live = 1;
    rec_of_origin_[origin] = ri;
    return ri;
}

void IncSccState::out_link(int ri) {
    Rec& r = pool_[ri];
    VertexId c = dsu_.find(r.tail);
    r.out_prev = out_tail_[c];
    r.out_next = -1;
    if (out_tail_[c] >= 0)
        pool_[out_tail_[c]].out_next = ri;
    else
        out_head_[c] = ri;
    out_tail_[c] = ri;
}

void IncSccState::out_unlink(int ri) {
    Rec& r = pool_[ri];
    VertexId c = dsu_.find(r.tail);
    if (r.out_prev >= 0)
        pool_[r.out_prev].out_next = r.out_next;
    else
        out_head_[c] = r.out_next;
    if (r.out_next >= 0)
        pool_[r.out_next].out_prev = r.out_prev;
    else
        out_tail_[c] = r.out_prev;
    r.out_prev = r.out_next = -1;
}

void IncSccState::in_link(int ri) {
    Rec& r = pool_[ri];
    TWOEC_CHECK(!r.in_linked);
    VertexId c = dsu_.find(r.head);
    r.in_prev = in_tail_[c];
    r.in_next = -1;
    if (in_tail_[c] >= 0)
        pool_[in_tail_[c]].in_next = ri;
    else
        in_head_[c] = ri;
    in_tail_[c] = ri;
    r.in_linked = 1;
}

void IncSccState::in_unlink(int ri) {
    Rec& r = pool_[ri];
    VertexId c = dsu_.find(r.head);
    if (r.in_prev >= 0)
        pool_[r.in_prev].in_next = r.in_next;
    else
        in_head_[c] = r.in_next;
    if (r.in_next >= 0)
        pool_[r.in_next].in_prev = r.in_prev;
    else
        in_tail_[c] = r.in_prev;
    r.in_prev = r.in_next = -1;
    r.in_linked = 0;
}

void IncSccState::drop_record(int ri) {
    Rec& r = pool_[ri];
    if (r.in_linked) in_unlink(ri);
    out_unlink(ri);
    rec_of_origin_[r.origin] = -1;
    r.live = 0;
    free_recs_.push_back(ri);
}

void IncSccState::add_record(VertexId tail, VertexId head, EdgeId origin) {
    VertexId u = dsu_.find(tail), w = dsu_.find(head);
    TWOEC_CHECK(u != w);
    int ri = ensure_record(tail, head, origin);
    out_link(ri);
    if (engine_ == SccEngine::TwoWay && level_[u] == level_[w]) in_link(ri);
}

void IncSccState::remove_record(EdgeId origin) {
    TWOEC_CHECK(has_record(origin));
    drop_record(rec_of_origin_[origin]);
}

// ---- group order bookkeeping ----

void IncSccState::list_insert_after(VertexId group, VertexId c, VertexId after) {
    prev_[c] = after;
    next_[c] = next_[after];
    if (next_[after] != kNoVertex)
        prev_[next_[after]] = c;
    else
        list_tail_[group] = c;
    next_[after] = c;
}

void IncSccState::list_evict(VertexId c) {
    VertexId group = owner_[c];
    if (prev_[c] != kNoVertex)
        next_[prev_[c]] = next_[c];
    else
        list_head_[group] = next_[c];
    if (next_[c] != kNoVertex)
        prev_[next_[c]] = prev_[c];
    else
        list_tail_[group] = prev_[c];
    next_[c] = prev_[c] = kNoVertex;
}

void IncSccState::list_rename(VertexId oldc, VertexId newc) {
    if (oldc == newc) return;
    VertexId group = owner_[oldc];
    next_[newc] = next_[oldc];
    prev_[newc] = prev_[oldc];
    if (prev_[oldc] != kNoVertex)
        next_[prev_[oldc]] = newc;
    else
        list_head_[group] = newc;
    if (next_[oldc] != kNoVertex)
        prev_[next_[oldc]] = newc;
    else
        list_tail_[group] = newc;
    rank_[newc] = rank_[oldc];
    owner_[newc] = group;
    owner_[oldc] = kNoVertex;
    next_[oldc] = prev_[oldc] = kNoVertex;
}

void IncSccState::init_group(VertexId group, const std::vector<VertexId>& topo_canonicals) {
    TWOEC_CHECK(list_head_[group] == kNoVertex);
    groups_.push_back(group);
    VertexId last = kNoVertex;
    int r = 0;
    for (VertexId c : topo_canonicals) {
        TWOEC_CHECK(dsu_.find(c) == c && owner_[c] == kNoVertex);
        owner_[c] = group;
        rank_[c] = ++r;
        level_[c] = 1;
        prev_[c] = last;
        next_[c] = kNoVertex;
        if (last != kNoVertex)
            next_[last] = c;
        else
            list_head_[group] = c;
        last = c;
    }
    list_tail_[group] = last;
}

void IncSccState::evict(VertexId group, VertexId c) {
    TWOEC_CHECK(owner_[c] == group);
    list_evict(c);
    owner_[c] = kNoVertex;
}

void IncSccState::admit_after(VertexId group, VertexId c, VertexId after) {
    TWOEC_CHECK(owner_[after] == group && owner_[c] == kNoVertex);
    owner_[c] = group;
    level_[c] = level_[after];
    list_insert_after(group, c, after);
}

void IncSccState::rebuild_ranks(VertexId group) {
    int r = 0;
    for (VertexId c = list_head_[group]; c != kNoVertex; c = next_[c]) rank_[c] = ++r;
}

void IncSccState::unite(VertexId p, VertexId q) {
    dsu_.unite(p, q);
    if (out_head_[q] >= 0) {
        if (out_tail_[p] >= 0) {
            pool_[out_tail_[p]].out_next = out_head_[q];
            pool_[out_head_[q]].out_prev = out_tail_[p];
        } else {
            out_head_[p] = out_head_[q];
        }
        out_tail_[p] = out_tail_[q];
        out_head_[q] = out_tail_[q] = -1;
    }
    if (in_head_[q] >= 0) {
        if (in_tail_[p] >= 0) {
            pool_[in_tail_[p]].in_next = in_head_[q];
            pool_[in_head_[q]].in_prev = in_tail_[p];
        } else {
            in_head_[p] = in_head_[q];
        }
        in_tail_[p] = in_tail_[q];
        in_head_[q] = in_tail_[q] = -1;
    }
}

// ---- insertion ----

MergeReport IncSccState::insert_edge(VertexId group, VertexId tail, VertexId head,
                                     EdgeId origin) {
    VertexId u = dsu_.find(tail), w = dsu_.find(head);
    if (u == w) return {};
    TWOEC_CHECK(owner_[u] == group && owner_[w] == group);
    int ri = ensure_record(tail, head, origin);
    out_link(ri);
    if (engine_ == SccEngine::OneWay) return insert_oneway(group, u, w, ri);
    return insert_twoway(u, w, ri);
}

MergeReport IncSccState::insert_oneway(VertexId group, VertexId u, VertexId w, int) {
    if (rank_[u] < rank_[w]) return {};

    // everything reachable from w through components ranked at most rank(u),
    // in postorder
    unsigned ep = stamp();
    std::vector<VertexId> post;
    std::vector<std::pair<VertexId, int>> stack;
    seen_[w] = ep;
    stack.push_back({w, out_head_[w]});
    while (!stack.empty()) {
        auto& [c, it] = stack.back();
        if (it < 0) {
            post.push_back(c);
            stack.pop_back();
            continue;
        }
        int cur = it;
        it = pool_[cur].out_next;
        VertexId h = dsu_.find(pool_[cur].head);
        if (h == c) {
            drop_record(cur);
            continue;
        }
        if (rank_[h] <= rank_[u] && seen_[h] != ep) {
            seen_[h] = ep;
            stack.push_back({h, out_head_[h]});
        }
    }

    MergeReport rep;
    if (seen_[u] == ep) {
        // a cycle closed: the new component is everything in the searched
        // region that reaches u
        for (size_t i = 0; i < post.size(); ++i) local_idx_[post[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> radj(post.size());
        for (size_t i = 0; i < post.size(); ++i) {
            for (int it = out_head_[post[i]]; it >= 0; it = pool_[it].out_next) {
                VertexId h = dsu_.find(pool_[it].head);
                if (h != post[i] && seen_[h] == ep)
                    radj[local_idx_[h]].push_back(static_cast<int>(i));
            }
        }
        unsigned mep = ++epoch_;
        std::vector<int> bfs = {local_idx_[u]};
        mseen_[u] = mep;
        while (!bfs.empty()) {
            int li = bfs.back();
            bfs.pop_back();
            for (int lj : radj[li]) {
                VertexId c = post[lj];
                if (mseen_[c] != mep) {
                    mseen_[c] = mep;
                    bfs.push_back(lj);
                }
            }
        }

        VertexId surv = kNoVertex;
        for (VertexId c : post)
            if (mseen_[c] == mep) {
                rep.constituents.push_back({c, dsu_.size(c)});
                if (surv == kNoVertex || c < surv) surv = c;
            }
        for (VertexId c : post)
            if (c != u) evict(group, c);
        for (VertexId c : post)
            if (mseen_[c] == mep && c != surv) unite(surv, c);
        list_rename(u, surv);
        VertexId prevc = surv;
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            if (mseen_[*it] == mep) continue;
            admit_after(group, *it, prevc);
            prevc = *it;
        }
        rep.survivor = surv;
    } else {
        // no cycle: shift the searched region to just after u, keeping its
        // internal topological order
        for (VertexId c : post) evict(group, c);
        VertexId prevc = u;
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            admit_after(group, *it, prevc);
            prevc = *it;
        }
    }
    rebuild_ranks(group);
    return rep;
}

MergeReport IncSccState::insert_twoway(VertexId u, VertexId w, int newri) {
    MergeReport rep;
    if (level_[u] < level_[w]) return rep;

    // bounded backward pass among components at u's level
    unsigned bep = ++epoch_;
    bseen_[u] = bep;
    bparent_[u] = kNoVertex;
    std::vector<VertexId> bstack = {u};
    int traversed = 0;
    bool truncated = false;
    while (!bstack.empty() && !truncated) {
        VertexId v = bstack.back();
        bstack.pop_back();
        int it = in_head_[v];
        while (it >= 0) {
            int cur = it;
            it = pool_[cur].in_next;
            VertexId t = dsu_.find(pool_[cur].tail);
            if (t == v) {
                drop_record(cur);
                continue;
            }
            if (level_[t] != level_[v]) {
                in_unlink(cur);
                continue;
            }
            ++traversed;
            if (bseen_[t] != bep) {
                bseen_[t] = bep;
                bparent_[t] = v;
                bstack.push_back(t);
            }
            if (traversed >= delta_) {
                truncated = true;
                break;
            }
        }
    }

    auto merge_batch = [&](const std::vector<VertexId>& names) {
        // resolve to current canonicals, dedupe
        std::vector<VertexId> comps;
        for (VertexId x : names) {
            VertexId c = dsu_.find(x);
            if (std::find(comps.begin(), comps.end(), c) == comps.end()) comps.push_back(c);
        }
        TWOEC_CHECK(comps.size() >= 2);
        VertexId surv = *std::min_element(comps.begin(), comps.end());
        int maxlvl = 0;
        bool bmarked = false;
        for (VertexId c : comps) {
            maxlvl = std::max(maxlvl, level_[c]);
            if (bseen_[c] == bep) bmarked = true;
            if (c != rep.survivor)
                rep.constituents.push_back({c, dsu_.size(c)});
        }
        for (VertexId c : comps)
            if (c != surv) {
                evict(owner_[c], c);
                unite(surv, c);
            }
        level_[surv] = maxlvl;
        if (bmarked) bseen_[surv] = bep;
        rep.survivor = surv;
        return surv;
    };

    if (!truncated && level_[w] == level_[u]) {
        if (bseen_[w] != bep) {
            in_link(newri);
            return rep;
        }
        // same-level cycle: merge everything reachable from w inside the
        // backward-marked region
        unsigned mep = ++epoch_;
        mseen_[w] = mep;
        std::vector<VertexId> names = {w}, mstack = {w};
        while (!mstack.empty()) {
            VertexId v = mstack.back();
            mstack.pop_back();
            int it = out_head_[v];
            while (it >= 0) {
                int cur = it;
                it = pool_[cur].out_next;
                VertexId h = dsu_.find(pool_[cur].head);
                if (h == v) {
                    drop_record(cur);
                    continue;
                }
                if (bseen_[h] == bep && mseen_[h] != mep) {
                    mseen_[h] = mep;
                    names.push_back(h);
                    mstack.push_back(h);
                }
            }
        }
        merge_batch(names);
        // the triggering edge now lies inside the merged component
        if (pool_[newri].live) drop_record(newri);
        return rep;
    }

    // forward pass from w, raising levels; cycles merge and resume
    int target = truncated ? level_[u] + 1 : level_[u];
    if (level_[w] < target) {
        level_[w] = target;
        while (in_head_[w] >= 0) in_unlink(in_head_[w]);
    }
    fparent_[w] = kNoVertex;
    std::vector<VertexId> fstack = {w};
    while (!fstack.empty()) {
        VertexId v = fstack.back();
        fstack.pop_back();
        if (dsu_.find(v) != v) continue;  // absorbed; survivor rescans
        int it = out_head_[v];
        while (it >= 0) {
            int cur = it;
            it = pool_[cur].out_next;
            VertexId h = dsu_.find(pool_[cur].head);
            if (h == v) {
                drop_record(cur);
                continue;
            }
            if (bseen_[h] == bep) {
                // h reaches u, u reaches w through the new edge, w reaches v:
                // collect both discovery chains and contract
                std::vector<VertexId> names = {u, w, v, h};
                auto walk = [&](const std::vector<VertexId>& par, VertexId x) {
                    // re-raises can redirect a discovery chain, so guard
                    // against walking into an already-collected name
                    while (par[x] != kNoVertex &&
                           std::find(names.begin(), names.end(), par[x]) == names.end()) {
                        x = par[x];
                        names.push_back(x);
                    }
                };
                walk(fparent_, v);
                walk(bparent_, h);
                VertexId surv = merge_batch(names);
                fparent_[surv] = kNoVertex;
                fstack.push_back(surv);
                break;
            }
            if (level_[h] < level_[v]) {
                level_[h] = level_[v];
                while (in_head_[h] >= 0) in_unlink(in_head_[h]);
                in_link(cur);
                fparent_[h] = v;
                fstack.push_back(h);
            } else if (level_[h] == level_[v]) {
                if (pool_[cur].in_linked) in_unlink(cur);
                in_link(cur);
            }
        }
    }

    if (rep.survivor != kNoVertex) {
        // a merge can lift u's side into the level the search was working at,
        // where edges examined before the merge are never revisited; any cycle
        // still open sits entirely on that one level and runs through the
        // merged component, so close it with one exact same-level sweep
        VertexId s = dsu_.find(u);
        unsigned swb = ++epoch_;
        bseen_[s] = swb;
        std::vector<VertexId> bq = {s};
        while (!bq.empty()) {
            VertexId v = bq.back();
            bq.pop_back();
            int it = in_head_[v];
            while (it >= 0) {
                int cur = it;
                it = pool_[cur].in_next;
                VertexId t = dsu_.find(pool_[cur].tail);
                if (t == v) {
                    drop_record(cur);
                    continue;
                }
                if (level_[t] != level_[v]) {
                    in_unlink(cur);
                    continue;
                }
                if (bseen_[t] != swb) {
                    bseen_[t] = swb;
                    bq.push_back(t);
                }
            }
        }
        unsigned swf = ++epoch_;
        mseen_[s] = swf;
        std::vector<VertexId> names = {s}, fq = {s};
        while (!fq.empty()) {
            VertexId v = fq.back();
            fq.pop_back();
            int it = out_head_[v];
            while (it >= 0) {
                int cur = it;
                it = pool_[cur].out_next;
                VertexId h = dsu_.find(pool_[cur].head);
                if (h == v) {
                    drop_record(cur);
                    continue;
                }
                if (level_[h] == level_[s] && bseen_[h] == swb && mseen_[h] != swf) {
                    mseen_[h] = swf;
                    names.push_back(h);
                    fq.push_back(h);
                }
            }
        }
        if (names.size() > 1) merge_batch(names);
    }

    // the new edge's own in-record, if its ends settled on one level
    if (pool_[newri].live) {
        VertexId a = dsu_.find(pool_[newri].tail), b = dsu_.find(pool_[newri].head);
        if (a == b) {
            drop_record(newri);
        } else if (level_[a] == level_[b] && !pool_[newri].in_linked) {
            in_link(newri);
        }
    }
    return rep;
}

// ---- validation ----

void IncSccState::validate() const {
    std::vector<char> listed(n_ + 1, 0);
    for (VertexId g : groups_) {
        VertexId prev = kNoVertex;
        int last_rank = 0;
        for (VertexId c = list_head_[g]; c != kNoVertex; c = next_[c]) {
            TWOEC_CHECK(dsu_.find(c) == c);
            TWOEC_CHECK(owner_[c] == g);
            TWOEC_CHECK(prev_[c] == prev);
            TWOEC_CHECK(!listed[c]);
            listed[c] = 1;
            if (engine_ == SccEngine::OneWay) {
                TWOEC_CHECK(rank_[c] > last_rank);
                last_rank = rank_[c];
            }
            prev = c;
        }
        TWOEC_CHECK(list_tail_[g] == prev);
    }

    int live_seen = 0;
    for (size_t ri = 0; ri < pool_.size(); ++ri) {
        const Rec& r = pool_[ri];
        if (!r.live) continue;
        ++live_seen;
        TWOEC_CHECK(rec_of_origin_[r.origin] == static_cast<int>(ri));
        VertexId t = dsu_.find(r.tail), h = dsu_.find(r.head);
        if (t == h) continue;  // stale loop awaiting lazy purge
        if (engine_ == SccEngine::OneWay) {
            TWOEC_CHECK(!r.in_linked);
            if (owner_[t] != kNoVertex && owner_[t] == owner_[h])
                TWOEC_CHECK(rank_[t] < rank_[h]);
        } else {
            TWOEC_CHECK(level_[t] <= level_[h]);
            if (level_[t] == level_[h]) TWOEC_CHECK(r.in_linked);
        }
    }
    int live_mapped = 0;
    for (int ri : rec_of_origin_)
        if (ri >= 0) ++live_mapped;
    TWOEC_CHECK(live_seen == live_mapped);

    for (VertexId c = 1; c <= n_; ++c) {
        if (dsu_.find(c) != c) continue;
        for (int it = out_head_[c]; it >= 0; it = pool_[it].out_next)
            TWOEC_CHECK(dsu_.find(pool_[it].tail) == c);
        for (int it = in_head_[c]; it >= 0; it = pool_[it].in_next) {
            TWOEC_CHECK(pool_[it].in_linked);
            TWOEC_CHECK(dsu_.find(pool_[it].head) == c);
        }
    }
}

}  // namespace twoec
