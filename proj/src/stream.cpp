#include "twoec/stream.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twoec/blocks.hpp"
#include "twoec/oracle.hpp"

namespace twoec {

namespace {

constexpr int kOracleVertexCap = 200;

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
               line[j] != '#')
            ++j;
        toks.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

std::optional<int> parse_int(const std::string& tok) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) return std::nullopt;
    return value;
}

std::string format_partition(const std::vector<std::vector<VertexId>>& part) {
    std::ostringstream os;
    for (const auto& blk : part) {
        os << '[';
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) os << ' ';
            os << blk[i];
        }
        os << ']';
    }
    return os.str();
}

EdgeId edge_id_of(const Digraph& g, VertexId a, VertexId b) {
    for (const Arc& arc : g.out(a))
        if (arc.to == b) return arc.eid;
    return kNoEdge;
}

// Shared parse/execute loop. `answer` is null in dump mode, where only graph
// and insert commands are legal and nothing is printed per command.
struct Driver {
    const StreamOptions& opt;
    std::ostringstream out;
    std::optional<TwoEcIndex> ix;
    std::optional<Digraph> mirror;  // only with oracle_check
    long long inserts = 0, noops = 0, queries = 0;

    StreamResult fail(int lineno, const std::string& msg, int code = 1) {
        StreamResult res;
        res.output = out.str();
        res.error = "line " + std::to_string(lineno) + ": " + msg;
        res.exit_code = code;
        return res;
    }

    // nullopt means the command was handled; otherwise the error result.
    std::optional<StreamResult> step(int lineno, const std::vector<std::string>& toks,
                                     bool insert_only) {
        const std::string& cmd = toks[0];
        if (!ix && cmd != "graph") return fail(lineno, "expected 'graph n' before '" + cmd + "'");

        if (cmd == "graph") {
            if (ix) return fail(lineno, "repeated graph command");
            if (toks.size() != 2) return fail(lineno, "expected 'graph n'");
            auto n = parse_int(toks[1]);
            if (!n || *n < 1) return fail(lineno, "graph size must be a positive integer");
            if (opt.oracle_check && *n > kOracleVertexCap)
                return fail(lineno, "oracle checking supports at most " +
                                        std::to_string(kOracleVertexCap) + " vertices");
            ix.emplace(*n, opt.engine);
            if (opt.oracle_check) mirror.emplace(*n);
            return std::nullopt;
        }

        if (cmd == "insert" || cmd == "query2ec") {
            if (toks.size() != 3) return fail(lineno, "expected '" + cmd + " u v'");
            auto u = parse_int(toks[1]), v = parse_int(toks[2]);
            if (!u || !v) return fail(lineno, "expected integer vertex ids");
            const int n = ix->vertex_count();
            if (*u < 1 || *u > n || *v < 1 || *v > n)
                return fail(lineno, "vertex out of range 1.." + std::to_string(n));
            if (cmd == "insert") return do_insert(lineno, *u, *v);
            if (insert_only) return fail(lineno, "only graph/insert commands are allowed here");
            return do_query(lineno, *u, *v);
        }

        if (insert_only) return fail(lineno, "only graph/insert commands are allowed here");

        if (cmd == "blocks") {
            if (toks.size() != 1) return fail(lineno, "'blocks' takes no arguments");
            auto part = ix->blocks();
            if (opt.oracle_check) {
                auto want = oracle_blocks(*mirror);
                if (part != want)
                    return fail(lineno,
                                "oracle mismatch on blocks\nengine: " + format_partition(part) +
                                    "\noracle: " + format_partition(want),
                                2);
            }
            out << "blocks " << part.size() << '\n';
            for (const auto& blk : part) {
                out << "block";
                for (VertexId m : blk) out << ' ' << m;
                out << '\n';
            }
            return std::nullopt;
        }

        if (cmd == "bridges") {
            if (toks.size() != 1) return fail(lineno, "'bridges' takes no arguments");
            auto sb = ix->strong_bridges();
            if (opt.oracle_check) {
                auto want = oracle_strong_bridges(*mirror);
                if (sb != want) return fail(lineno, "oracle mismatch on bridges", 2);
            }
            for (auto [a, b] : sb) out << "bridge " << a << ' ' << b << '\n';
            return std::nullopt;
        }

        return fail(lineno, "unknown command '" + cmd + "'");
    }

    std::optional<StreamResult> do_insert(int lineno, VertexId u, VertexId v) {
        if (!ix->insert_edge(u, v)) {
            ++noops;
            out << "noop " << u << ' ' << v << '\n';
            return std::nullopt;
        }
        ++inserts;
        if (opt.oracle_check) {
            mirror->add_edge(u, v);
            auto got = ix->blocks();
            auto want = oracle_blocks(*mirror);
            if (got != want)
                return fail(lineno,
                            "oracle mismatch after insert " + std::to_string(u) + " " +
                                std::to_string(v) + "\nengine: " + format_partition(got) +
                                "\noracle: " + format_partition(want),
                            2);
        }
        return std::nullopt;
    }

    std::optional<StreamResult> do_query(int lineno, VertexId u, VertexId v) {
        ++queries;
        bool got = ix->two_edge_connected(u, v);
        out << "2ec " << u << ' ' << v << ' ' << (got ? "true" : "false");
        Separation sep;
        if (!got) {
            sep = ix->separating_edge(u, v);
            if (sep.same_scc)
                out << " witness " << sep.a << ' ' << sep.b;
            else
                out << " nsc";
        }
        out << '\n';

        if (opt.oracle_check) {
            bool want = oracle_two_ec(*mirror, u, v);
            if (got != want)
                return fail(lineno, "oracle mismatch on query2ec " + std::to_string(u) + " " +
                                        std::to_string(v) + ": engine says " +
                                        (got ? "true" : "false"),
                            2);
            if (!got) {
                bool same = scc_ids(*mirror).same(u, v);
                if (same != sep.same_scc)
                    return fail(lineno, "oracle mismatch on query2ec strong connectivity", 2);
                if (same) {
                    EdgeId e = edge_id_of(*mirror, sep.a, sep.b);
                    if (e == kNoEdge || scc_ids_without(*mirror, e).same(u, v))
                        return fail(lineno,
                                    "witness " + std::to_string(sep.a) + " " +
                                        std::to_string(sep.b) + " does not separate " +
                                        std::to_string(u) + " and " + std::to_string(v),
                                    2);
                }
            }
        }
        return std::nullopt;
    }

    StreamResult finish(int last_lineno) {
        if (!ix) return fail(std::max(last_lineno, 1), "missing 'graph n' command");
        if (opt.metrics) {
            out << "# metric insertions " << inserts << '\n';
            out << "# metric noops " << noops << '\n';
            out << "# metric queries " << queries << '\n';
            out << "# metric reinits " << ix->total_reinits() << '\n';
            out << "# metric scan_events " << ix->total_scan_events() << '\n';
            out << "# metric unites " << ix->total_unites() << '\n';
            out << "# metric ever_bridges " << ix->ever_bridge_total() << '\n';
        }
        StreamResult res;
        res.output = out.str();
        return res;
    }
};

StreamResult run_lines(Driver& drv, const std::string& input, bool insert_only) {
    std::istringstream in(input);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (auto err = drv.step(lineno, toks, insert_only)) return *err;
    }
    return drv.finish(lineno);
}

}  // namespace

StreamResult run_stream(const std::string& input, const StreamOptions& opt) {
    Driver drv{opt};
    return run_lines(drv, input, false);
}

StreamResult dump_dominators(const std::string& input, const StreamOptions& opt) {
    StreamOptions plain = opt;
    plain.metrics = false;
    Driver drv{plain};
    StreamResult res = run_lines(drv, input, true);
    if (res.exit_code != 0) return res;

    std::map<VertexId, const ScBlockState*> by_min;
    for (const ScBlockState* st : drv.ix->components())
        by_min[st->locals_to_globals()[1]] = st;

    std::ostringstream os;
    for (auto& [mn, st] : by_min) {
        const auto& l2g = st->locals_to_globals();
        for (bool rev : {false, true}) {
            const DominatorState& dom = st->dom(rev);
            os << "tree " << (rev ? "rev" : "fwd") << ' ' << st->global_start() << '\n';
            for (int lv = 1; lv <= st->size(); ++lv) {
                VertexId p = dom.parent(lv);
                os << l2g[lv] << ' ' << (p == kNoVertex ? 0 : l2g[p]) << ' ' << dom.depth(lv)
                   << ' ' << l2g[dom.root(lv)] << ' ' << (dom.bridge(lv) ? 1 : 0) << '\n';
            }
        }
    }
    StreamResult dump;
    dump.output = os.str();
    return dump;
}

}  // namespace twoec
