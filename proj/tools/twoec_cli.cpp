#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "twoec/blocks.hpp"
#include "twoec/stream.hpp"

using namespace twoec;

namespace {

bool read_all(const std::string& path, std::string& text, std::string& err) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err = "cannot open input file '" + path + "'";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

bool write_all(const std::string& path, const std::string& text, std::string& err) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err = "cannot open output file '" + path + "'";
        return false;
    }
    out << text;
    return out.good();
}

SccEngine engine_of(const std::string& name) {
    return name == "oneway" ? SccEngine::OneWay : SccEngine::TwoWay;
}

// Nearest-rank percentile of an already sorted sample.
long long percentile(const std::vector<long long>& sorted, double p) {
    if (sorted.empty()) return 0;
    size_t rank = static_cast<size_t>(p * (sorted.size() - 1) + 0.5);
    return sorted[std::min(rank, sorted.size() - 1)];
}

void report_times(std::ostream& os, const char* label, double total_ms,
                  std::vector<long long> per_us) {
    std::sort(per_us.begin(), per_us.end());
    char line[256];
    std::snprintf(line, sizeof line,
                  "%s total_ms %.1f p50_us %lld p90_us %lld p99_us %lld max_us %lld", label,
                  total_ms, percentile(per_us, 0.50), percentile(per_us, 0.90),
                  percentile(per_us, 0.99), per_us.empty() ? 0 : per_us.back());
    os << line << '\n';
}

int run_bench(int n, int m, unsigned seed, SccEngine engine) {
    using clock = std::chrono::steady_clock;
    auto us = [](clock::duration d) {
        return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
    };

    std::mt19937 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs(m);
    for (auto& [u, v] : pairs) {
        u = static_cast<VertexId>(rng() % n + 1);
        v = static_cast<VertexId>(rng() % n + 1);
    }

    TwoEcIndex ix(n, engine);
    std::vector<long long> inc_us;
    inc_us.reserve(m);
    long long effective = 0;
    auto inc_start = clock::now();
    for (auto [u, v] : pairs) {
        auto t0 = clock::now();
        if (ix.insert_edge(u, v)) ++effective;
        inc_us.push_back(us(clock::now() - t0));
    }
    double inc_total = us(clock::now() - inc_start) / 1000.0;

    Digraph g(n);
    std::vector<long long> base_us;
    base_us.reserve(m);
    std::vector<std::vector<VertexId>> base_blocks;
    auto base_start = clock::now();
    for (auto [u, v] : pairs) {
        auto t0 = clock::now();
        if (g.add_edge(u, v) != kNoEdge) base_blocks = static_blocks_partition(g);
        base_us.push_back(us(clock::now() - t0));
    }
    double base_total = us(clock::now() - base_start) / 1000.0;
    if (effective == 0) base_blocks = static_blocks_partition(g);

    std::ostream& os = std::cout;
    os << "bench n " << n << " m " << m << " seed " << seed << " engine "
       << (engine == SccEngine::OneWay ? "oneway" : "twoway") << '\n';
    os << "insertions " << effective << " noops " << (m - effective) << '\n';
    report_times(os, "incremental", inc_total, inc_us);
    report_times(os, "baseline", base_total, base_us);
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "speedup %.1fx", base_total / std::max(inc_total, 1e-9));
    os << ratio << '\n';
    os << "counters scan_events " << ix.total_scan_events() << " reinits " << ix.total_reinits()
       << " unites " << ix.total_unites() << '\n';

    if (ix.blocks() != base_blocks) {
        std::cerr << "final block partitions differ between engines\n";
        return 2;
    }
    os << "partitions identical\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2-edge-connected blocks of a directed graph under edge insertions"};
    app.require_subcommand(1);

    std::string input_path = "-";
    std::string output_path = "-";
    std::string engine = "twoway";
    bool oracle = false;
    bool metrics = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input_path, "input file, '-' or absent for stdin");
        sub->add_option("output", output_path, "output file, '-' or absent for stdout");
        sub->add_option("--engine", engine, "auxiliary component engine")
            ->check(CLI::IsMember({"oneway", "twoway"}));
    };

    CLI::App* run = app.add_subcommand("run", "execute a command stream");
    add_common(run);
    run->add_flag("--oracle-check", oracle, "verify every answer against a from-scratch oracle");
    run->add_flag("--metrics", metrics, "append '# metric name value' lines");

    CLI::App* dump = app.add_subcommand(
        "dump-dom", "apply the stream's insertions, then print the dominator trees");
    add_common(dump);

    CLI::App* bench = app.add_subcommand(
        "bench", "time incremental maintenance against rebuilding after every insertion");
    int bench_n = 2000;
    int bench_m = 20000;
    unsigned bench_seed = 1;
    bench->add_option("-n,--vertices", bench_n, "vertex count")->check(CLI::Range(2, 1000000));
    bench->add_option("-m,--edges", bench_m, "insertion attempts")->check(CLI::Range(1, 100000000));
    bench->add_option("-s,--seed", bench_seed, "random seed");
    bench->add_option("--engine", engine, "auxiliary component engine")
        ->check(CLI::IsMember({"oneway", "twoway"}));

    CLI11_PARSE(app, argc, argv);

    if (bench->parsed()) return run_bench(bench_n, bench_m, bench_seed, engine_of(engine));

    std::string text, io_err;
    if (!read_all(input_path, text, io_err)) {
        std::cerr << io_err << '\n';
        return 1;
    }

    StreamOptions opt;
    opt.engine = engine_of(engine);
    opt.oracle_check = oracle;
    opt.metrics = metrics;
    StreamResult res = run->parsed() ? run_stream(text, opt) : dump_dominators(text, opt);

    if (!write_all(output_path, res.output, io_err)) {
        std::cerr << io_err << '\n';
        return 1;
    }
    if (res.exit_code != 0) std::cerr << res.error << '\n';
    return res.exit_code;
}
