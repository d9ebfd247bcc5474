#include "twoec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "twoec/check.hpp"

namespace twoec {

namespace {

struct TarjanFrame {
    VertexId v;
    int arc;
};

// Tarjan with an optional edge to pretend-delete. Component ids are
// renumbered by first occurrence over 1..n so two partitions are equal iff
// the comp vectors are equal.
SccPartition scc_ids_impl(const Digraph& g, EdgeId skip) {
    const int n = g.vertex_count();
    SccPartition res;
    res.comp.assign(n + 1, -1);
    std::vector<int> num(n + 1, 0), low(n + 1, 0);
    std::vector<char> on_stack(n + 1, 0);
    std::vector<VertexId> stack;
    std::vector<TarjanFrame> frames;
    int timer = 0;
    int raw_count = 0;

    for (VertexId start = 1; start <= n; ++start) {
        if (num[start]) continue;
        num[start] = low[start] = ++timer;
        stack.push_back(start);
        on_stack[start] = 1;
        frames.push_back({start, 0});
        while (!frames.empty()) {
            VertexId v = frames.back().v;
            const auto& arcs = g.out(v);
            if (frames.back().arc < static_cast<int>(arcs.size())) {
                auto [w, eid] = arcs[frames.back().arc++];
                if (eid == skip) continue;
                if (!num[w]) {
                    num[w] = low[w] = ++timer;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    while (true) {
                        VertexId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        res.comp[w] = raw_count;
                        if (w == v) break;
                    }
                    ++raw_count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    VertexId p = frames.back().v;
                    low[p] = std::min(low[p], low[v]);
                }
            }
        }
    }

    std::vector<int> remap(raw_count, -1);
    int next = 0;
    for (VertexId v = 1; v <= n; ++v) {
        if (remap[res.comp[v]] < 0) remap[res.comp[v]] = next++;
    }
    for (VertexId v = 1; v <= n; ++v) res.comp[v] = remap[res.comp[v]];
    res.count = raw_count;
    return res;
}

// Unit-capacity check for two edge-disjoint s->t paths (successive BFS
// augmentation, classic cancel-on-reverse-arc bookkeeping).
bool two_edge_disjoint(const Digraph& g, VertexId s, VertexId t) {
    if (s == t) return true;
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    for (int round = 0; round < 2; ++round) {
        std::vector<VertexId> prev_v(n + 1, kNoVertex);
        std::vector<EdgeId> prev_e(n + 1, kNoEdge);
        std::vector<char> seen(n + 1, 0);
        std::vector<VertexId> queue{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size() && !seen[t]; ++qi) {
            VertexId x = queue[qi];
            for (auto [w, e] : g.out(x)) {
                if (!used[e] && !seen[w]) {
                    seen[w] = 1;
                    prev_v[w] = x;
                    prev_e[w] = e;
                    queue.push_back(w);
                }
            }
            for (auto [a, e] : g.in(x)) {
                if (used[e] && !seen[a]) {
                    seen[a] = 1;
                    prev_v[a] = x;
                    prev_e[a] = e;
                    queue.push_back(a);
                }
            }
        }
        if (!seen[t]) return false;
        for (VertexId x = t; x != s; x = prev_v[x]) used[prev_e[x]] ^= 1;
    }
    return true;
}

bool flow_two_ec(const Digraph& g, VertexId u, VertexId v) {
    return u == v || (two_edge_disjoint(g, u, v) && two_edge_disjoint(g, v, u));
}

bool reaches_skipping(const FlowView& fv, VertexId s, VertexId target, EdgeId skip) {
    const int n = fv.vertex_count();
    std::vector<char> seen(n + 1, 0);
    std::vector<VertexId> queue{s};
    seen[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (auto [w, e] : fv.out(queue[qi])) {
            if (e != skip && !seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen[target];
}

}  // namespace

SccPartition scc_ids(const Digraph& g) {
    return scc_ids_impl(g, kNoEdge);
}

SccPartition scc_ids_without(const Digraph& g, EdgeId skip) {
    return scc_ids_impl(g, skip);
}

std::vector<std::pair<VertexId, VertexId>> oracle_strong_bridges(const Digraph& g) {
    std::vector<std::pair<VertexId, VertexId>> bridges;
    SccPartition base = scc_ids(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (scc_ids_without(g, e).comp != base.comp) bridges.push_back(g.edge(e));
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

bool oracle_two_ec(const Digraph& g, VertexId u, VertexId v) {
    if (u == v) return true;
    if (!scc_ids(g).same(u, v)) return false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!scc_ids_without(g, e).same(u, v)) return false;
    }
    return true;
}

std::vector<std::vector<VertexId>> oracle_blocks(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> sig(n + 1);
    SccPartition base = scc_ids(g);
    for (VertexId v = 1; v <= n; ++v) sig[v].push_back(base.comp[v]);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        SccPartition del = scc_ids_without(g, e);
        for (VertexId v = 1; v <= n; ++v) sig[v].push_back(del.comp[v]);
    }

    std::map<std::vector<int>, std::vector<VertexId>> groups;
    for (VertexId v = 1; v <= n; ++v) groups[sig[v]].push_back(v);

    std::vector<std::vector<VertexId>> blocks;
    blocks.reserve(groups.size());
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    if (n <= 8) {
        std::vector<int> block_of(n + 1, -1);
        for (size_t b = 0; b < blocks.size(); ++b) {
            for (VertexId v : blocks[b]) block_of[v] = static_cast<int>(b);
        }
        for (VertexId u = 1; u <= n; ++u) {
            for (VertexId v = u + 1; v <= n; ++v) {
                TWOEC_CHECK(flow_two_ec(g, u, v) == (block_of[u] == block_of[v]));
            }
        }
    }
    return blocks;
}

OracleDomTree oracle_dominator_tree(const FlowView& fv, VertexId s) {
    const int n = fv.vertex_count();
    OracleDomTree t;
    t.s = s;
    t.reachable.assign(n + 1, 0);
    t.parent.assign(n + 1, kNoVertex);
    t.depth.assign(n + 1, -1);
    t.is_bridge.assign(n + 1, 0);
    t.root.assign(n + 1, kNoVertex);

    std::vector<VertexId> order{s};
    t.reachable[s] = 1;
    for (size_t qi = 0; qi < order.size(); ++qi) {
        for (auto [w, e] : fv.out(order[qi])) {
            if (!t.reachable[w]) {
                t.reachable[w] = 1;
                order.push_back(w);
            }
        }
    }

    const int words = (n >> 6) + 1;
    std::vector<std::uint64_t> all(words, 0);
    for (VertexId v : order) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<std::uint64_t> dom(static_cast<size_t>(n + 1) * words, 0);
    auto row = [&](VertexId v) { return dom.data() + static_cast<size_t>(v) * words; };
    for (VertexId v : order) {
        if (v == s) {
            row(v)[v >> 6] = std::uint64_t{1} << (v & 63);
        } else {
            std::copy(all.begin(), all.end(), row(v));
        }
    }

    std::vector<std::uint64_t> tmp(words);
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexId v : order) {
            if (v == s) continue;
            std::copy(all.begin(), all.end(), tmp.begin());
            for (auto [u, e] : fv.in(v)) {
                if (!t.reachable[u]) continue;
                const std::uint64_t* ru = row(u);
                for (int w = 0; w < words; ++w) tmp[w] &= ru[w];
            }
            tmp[v >> 6] |= std::uint64_t{1} << (v & 63);
            if (!std::equal(tmp.begin(), tmp.end(), row(v))) {
                std::copy(tmp.begin(), tmp.end(), row(v));
                changed = true;
            }
        }
    }

    for (VertexId v : order) {
        int bits = 0;
        for (int w = 0; w < words; ++w) bits += std::popcount(row(v)[w]);
        t.depth[v] = bits - 1;
    }
    for (VertexId v : order) {
        if (v == s) continue;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bitsw = row(v)[w];
            while (bitsw) {
                VertexId u = (w << 6) + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                if (u != v && t.depth[u] == t.depth[v] - 1) t.parent[v] = u;
            }
        }
        TWOEC_CHECK(t.parent[v] != kNoVertex);
    }

    for (VertexId v : order) {
        if (v == s) continue;
        EdgeId tree_edge = kNoEdge;
        for (auto [u, e] : fv.in(v)) {
            if (u == t.parent[v]) tree_edge = e;
        }
        if (tree_edge != kNoEdge && !reaches_skipping(fv, s, v, tree_edge)) t.is_bridge[v] = 1;
    }

    std::vector<VertexId> by_depth(order);
    std::sort(by_depth.begin(), by_depth.end(),
              [&](VertexId a, VertexId b) { return t.depth[a] < t.depth[b]; });
    for (VertexId v : by_depth) {
        if (v == s) {
            t.root[v] = s;
        } else {
            t.root[v] = t.is_bridge[v] ? v : t.root[t.parent[v]];
        }
    }
    return t;
}

}  // namespace twoec
