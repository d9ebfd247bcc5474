// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every tolerance is a named constant below; equality checks are
// exact.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "twoec/blocks.hpp"
#include "twoec/dominator.hpp"
#include "twoec/oracle.hpp"

using namespace twoec;

namespace {

constexpr int kSuite1Instances = 500;      // criterion 1
constexpr int kSuite1SeedBase = 24601;
constexpr int kSuite2Instances = 20;       // criterion 2
constexpr int kSuite2Vertices = 50;
constexpr int kSuite2Insertions = 1000;
constexpr int kSuite2CheckEvery = 25;
constexpr int kSuite2SeedBase = 182818;
constexpr long long kMinNegativeQueries = 10000;  // criterion 5 sample floor
constexpr int kMaxQueryReads = 12;                // criterion 9 cap
constexpr double kBenchMaxRatio = 1.0 / 5.0;      // criterion 8 bound
constexpr int kBenchVertices = 2000;
constexpr int kBenchAttempts = 20000;
constexpr unsigned kBenchSeed = 1;

struct Criterion {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool reaches_without(const Digraph& g, VertexId src, VertexId dst, EdgeId skip) {
    std::vector<char> seen(g.vertex_count() + 1, 0);
    std::vector<VertexId> queue{src};
    seen[src] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        if (v == dst) return true;
        for (const Arc& a : g.out(v)) {
            if (a.eid == skip || seen[a.to]) continue;
            seen[a.to] = 1;
            queue.push_back(a.to);
        }
    }
    return false;
}

EdgeId edge_id_of(const Digraph& g, VertexId a, VertexId b) {
    for (const Arc& arc : g.out(a))
        if (arc.to == b) return arc.eid;
    return kNoEdge;
}

bool dominators_match(const DominatorState& live) {
    DominatorState fresh = compute_dominator_state(live.view(), live.start());
    return live.parents() == fresh.parents() && live.depths() == fresh.depths() &&
           live.bridges() == fresh.bridges() && live.roots() == fresh.roots();
}

std::vector<std::pair<VertexId, VertexId>> shuffled_pairs(int n, std::mt19937& rng) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1));
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = 1; v <= n; ++v)
            if (u != v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    return pairs;
}

void check_dominators(const TwoEcIndex& ix, Criterion& c3, const char* where) {
    for (const ScBlockState* st : ix.components()) {
        if (!dominators_match(st->dom(false)) || !dominators_match(st->dom(true)))
            c3.fail(std::string("stale dominator state in ") + where);
    }
}

void check_bridges(TwoEcIndex& ix, const Digraph& mirror, Criterion& c4, const char* where) {
    if (ix.strong_bridges() != oracle_strong_bridges(mirror))
        c4.fail(std::string("strong-bridge set diverged in ") + where);
    for (const ScBlockState* st : ix.components()) {
        if (static_cast<int>(st->strong_bridges().size()) > 2 * (st->size() - 1))
            c4.fail(std::string("per-component bridge bound broken in ") + where);
    }
}

// Issues one query and certifies any negative answer. Returns 1 when the
// answer was negative with a witness edge, 0 otherwise.
int check_query(TwoEcIndex& ix, const Digraph& mirror, VertexId u, VertexId v, Criterion& c5,
                const char* where) {
    bool got = ix.two_edge_connected(u, v);
    if (got) return 0;
    Separation sep = ix.separating_edge(u, v);
    if (!sep.same_scc) {
        if (scc_ids(mirror).same(u, v)) c5.fail(std::string("false nsc answer in ") + where);
        return 0;
    }
    EdgeId e = edge_id_of(mirror, sep.a, sep.b);
    if (e == kNoEdge) {
        c5.fail(std::string("witness is not an edge in ") + where);
        return 1;
    }
    if (reaches_without(mirror, u, v, e) && reaches_without(mirror, v, u, e))
        c5.fail(std::string("witness does not separate in ") + where);
    return 1;
}

void run_suite1(Criterion& c1, Criterion& c3, Criterion& c4, Criterion& c5, Criterion& c6,
                long long& witness_negatives, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(kSuite1SeedBase);
    for (int inst = 0; inst < kSuite1Instances; ++inst) {
        int n = 2 + static_cast<int>(rng() % 11);
        auto pairs = shuffled_pairs(n, rng);
        size_t take = 1 + rng() % pairs.size();
        TwoEcIndex two(n, SccEngine::TwoWay);
        TwoEcIndex one(n, SccEngine::OneWay);
        Digraph mirror(n);
        for (size_t i = 0; i < take; ++i) {
            auto [u, v] = pairs[i];
            two.insert_edge(u, v);
            one.insert_edge(u, v);
            mirror.add_edge(u, v);

            auto got = two.blocks();
            if (got != oracle_blocks(mirror)) c1.fail("block partition diverged");
            if (got != one.blocks()) c6.fail("engines disagreed");
            check_dominators(two, c3, "suite 1");
            check_dominators(one, c3, "suite 1");
            check_bridges(two, mirror, c4, "suite 1");
            for (int q = 0; q < 3; ++q) {
                VertexId a = 1 + static_cast<int>(rng() % n);
                VertexId b = 1 + static_cast<int>(rng() % n);
                witness_negatives += check_query(two, mirror, a, b, c5, "suite 1");
            }
        }
    }
    elapsed = seconds_since(t0);
}

void run_suite2(Criterion& c2, Criterion& c3, Criterion& c4, Criterion& c5, Criterion& c7,
                long long& witness_negatives, double& elapsed) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = kSuite2Vertices;
    for (int inst = 0; inst < kSuite2Instances; ++inst) {
        std::mt19937 rng(kSuite2SeedBase + inst);
        auto pairs = shuffled_pairs(n, rng);
        TwoEcIndex ix(n, SccEngine::TwoWay);
        Digraph mirror(n);
        for (int i = 0; i < kSuite2Insertions; ++i) {
            auto [u, v] = pairs[i];
            ix.insert_edge(u, v);
            mirror.add_edge(u, v);

            check_dominators(ix, c3, "suite 2");
            for (const ScBlockState* st : ix.components()) {
                if (st->counters().reinits > 2 * (st->size() - 1))
                    c7.fail("reinit budget exceeded");
            }
            for (int q = 0; q < 6; ++q) {
                VertexId a = 1 + static_cast<int>(rng() % n);
                VertexId b = 1 + static_cast<int>(rng() % n);
                witness_negatives += check_query(ix, mirror, a, b, c5, "suite 2");
            }
            if ((i + 1) % kSuite2CheckEvery == 0 || i + 1 == kSuite2Insertions) {
                if (ix.blocks() != oracle_blocks(mirror)) c2.fail("block partition diverged");
                check_bridges(ix, mirror, c4, "suite 2");
            }
        }

        std::vector<long long> scans = ix.retired_scan_totals();
        for (const ScBlockState* st : ix.components()) {
            const auto& l2g = st->locals_to_globals();
            const auto& sf = st->scan_counts(false);
            const auto& sr = st->scan_counts(true);
            for (int lv = 1; lv <= st->size(); ++lv) scans[l2g[lv]] += sf[lv] + sr[lv];
        }
        for (VertexId v = 1; v <= n; ++v) {
            if (scans[v] > 2LL * n) c7.fail("scan budget exceeded at vertex");
        }
    }
    elapsed = seconds_since(t0);
}

void run_query_cost(Criterion& c9) {
    for (int n : {100, 2000}) {
        std::mt19937 rng(271828);
        TwoEcIndex ix(n, SccEngine::TwoWay);
        int attempts = 6 * n;
        for (int i = 0; i < attempts; ++i) {
            ix.insert_edge(1 + static_cast<int>(rng() % n), 1 + static_cast<int>(rng() % n));
            if (i % 50 != 0 && i + 1 != attempts) continue;
            for (int q = 0; q < 5; ++q) {
                VertexId a = 1 + static_cast<int>(rng() % n);
                VertexId b = 1 + static_cast<int>(rng() % n);
                ix.two_edge_connected(a, b);
                if (ix.last_query_reads() > kMaxQueryReads)
                    c9.fail("query read cap exceeded at n " + std::to_string(n));
            }
        }
    }
}

void run_bench(Criterion& c8, double& inc_s, double& base_s) {
    std::mt19937 rng(kBenchSeed);
    std::vector<std::pair<VertexId, VertexId>> pairs(kBenchAttempts);
    for (auto& [u, v] : pairs) {
        u = static_cast<VertexId>(rng() % kBenchVertices + 1);
        v = static_cast<VertexId>(rng() % kBenchVertices + 1);
    }

    auto t0 = std::chrono::steady_clock::now();
    TwoEcIndex ix(kBenchVertices, SccEngine::TwoWay);
    for (auto [u, v] : pairs) ix.insert_edge(u, v);
    inc_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    Digraph g(kBenchVertices);
    std::vector<std::vector<VertexId>> base_blocks;
    for (auto [u, v] : pairs) {
        if (g.add_edge(u, v) != kNoEdge) base_blocks = static_blocks_partition(g);
    }
    base_s = seconds_since(t0);

    if (ix.blocks() != base_blocks) c8.fail("final partitions differ");
    if (inc_s > base_s * kBenchMaxRatio) c8.fail("incremental slower than ratio bound");
}

void report(int k, const char* name, const Criterion& c, const std::string& extra = "") {
    std::string tail = c.pass ? extra : c.detail;
    std::printf("ACCEPTANCE %d %s: %s%s%s\n", k, name, c.pass ? "PASS" : "FAIL",
                tail.empty() ? "" : " ", tail.c_str());
}

}  // namespace

int main() {
    Criterion c1, c2, c3, c4, c5, c6, c7, c8, c9;
    long long witness_negatives = 0;
    double suite1_s = 0, suite2_s = 0, inc_s = 0, base_s = 0;

    run_suite1(c1, c3, c4, c5, c6, witness_negatives, suite1_s);
    run_suite2(c2, c3, c4, c5, c7, witness_negatives, suite2_s);
    if (witness_negatives < kMinNegativeQueries)
        c5.fail("only " + std::to_string(witness_negatives) + " certified negatives");
    run_query_cost(c9);
    run_bench(c8, inc_s, base_s);

    char buf[128];
    std::snprintf(buf, sizeof buf, "(%.1fs)", suite1_s);
    report(1, "small-scale oracle equivalence", c1, buf);
    std::snprintf(buf, sizeof buf, "(%.1fs)", suite2_s);
    report(2, "medium-scale oracle equivalence", c2, buf);
    report(3, "dominator maintenance", c3);
    report(4, "strong-bridge conservation", c4);
    std::snprintf(buf, sizeof buf, "(%lld certified negatives)", witness_negatives);
    report(5, "witness soundness", c5, buf);
    report(6, "engine differential", c6);
    report(7, "amortization budgets", c7);
    std::snprintf(buf, sizeof buf, "(incremental %.1fs vs baseline %.1fs)", inc_s, base_s);
    report(8, "relative performance", c8, buf);
    report(9, "query read cap", c9);

    int fails = !c1.pass + !c2.pass + !c3.pass + !c4.pass + !c5.pass + !c6.pass + !c7.pass +
                !c8.pass + !c9.pass;
    return fails;
}
