#include "twoec/auxiliary.hpp"

#include <algorithm>

#include "twoec/check.hpp"

namespace twoec {

VertexId nearest_ancestor_in(const DominatorState& st, VertexId v, VertexId r) {
    while (st.root(v) != r) {
        v = st.parent(st.root(v));
        TWOEC_CHECK(v != kNoVertex);
    }
    return v;
}

std::vector<AuxEdge> build_aux_edges(const DominatorState& st) {
    FlowView fv = st.view();
    std::vector<AuxEdge> result;
    for (EdgeId e = 0; e < fv.edge_count(); ++e) {
        auto [u, v] = fv.edge(e);
        if (!st.is_reachable(u)) continue;
        VertexId r = st.root(v);
        VertexId tail;
        if (st.root(u) == r) {
            tail = u;
        } else if (st.is_ancestor(r, u)) {
            tail = nearest_ancestor_in(st, u, r);
        } else {
            continue;
        }
        if (tail == v) continue;
        result.push_back({tail, v, e});
    }
    return result;
}

namespace {

struct TarjanFrame {
    VertexId v;
    size_t next;
};

}  // namespace

AuxComponents aux_components(const DominatorState& st, const std::vector<AuxEdge>& edges) {
    const int n = st.vertex_count();

    std::vector<std::vector<VertexId>> adj(n + 1);
    for (const AuxEdge& e : edges) adj[e.tail].push_back(e.head);

    AuxComponents out;
    out.canon.assign(n + 1, kNoVertex);

    std::vector<int> index(n + 1, 0), low(n + 1, 0);
    std::vector<char> on_stack(n + 1, 0);
    std::vector<VertexId> stack;
    std::vector<TarjanFrame> frames;
    // canonical of each component in pop order, with the root it lives under
    std::vector<std::pair<VertexId, VertexId>> popped;
    int counter = 0;

    for (VertexId v0 = 1; v0 <= n; ++v0) {
        if (!st.is_reachable(v0) || index[v0] != 0) continue;
        frames.push_back({v0, 0});
        index[v0] = low[v0] = ++counter;
        stack.push_back(v0);
        on_stack[v0] = 1;
        while (!frames.empty()) {
            TarjanFrame& f = frames.back();
            if (f.next < adj[f.v].size()) {
                VertexId w = adj[f.v][f.next++];
                if (index[w] == 0) {
                    index[w] = low[w] = ++counter;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                VertexId v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    VertexId canon = kNoVertex;
                    size_t first = stack.size();
                    while (true) {
                        VertexId w = stack[--first];
                        if (canon == kNoVertex || w < canon) canon = w;
                        if (w == v) break;
                    }
                    for (size_t i = first; i < stack.size(); ++i) {
                        on_stack[stack[i]] = 0;
                        out.canon[stack[i]] = canon;
                    }
                    stack.resize(first);
                    popped.emplace_back(st.root(v), canon);
                }
            }
        }
    }

    // Tarjan pops sinks first; reversing per root makes each list topological.
    std::vector<int> slot(n + 1, -1);
    for (auto it = popped.rbegin(); it != popped.rend(); ++it) {
        auto [r, canon] = *it;
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.roots.size());
            out.roots.push_back(r);
            out.order.emplace_back();
        }
        out.order[slot[r]].push_back(canon);
    }
    std::vector<int> perm(out.roots.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return out.roots[a] < out.roots[b]; });
    AuxComponents sorted;
    sorted.canon = std::move(out.canon);
    for (int i : perm) {
        sorted.roots.push_back(out.roots[i]);
        sorted.order.push_back(std::move(out.order[i]));
    }
    return sorted;
}

}  // namespace twoec
