#include "ipc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "ipc/bipartite.hpp"
#include "ipc/cover_engine.hpp"
#include "ipc/diff.hpp"
#include "ipc/errors.hpp"
#include "ipc/generators.hpp"
#include "ipc/interval_model.hpp"
#include "ipc/oracle.hpp"
#include "ipc/ordered_graph.hpp"
#include "ipc/path_cover.hpp"
#include "ipc/verify.hpp"

namespace ipc {

namespace {

// Bad flag values and similar; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// First meaningful line decides: `X=..` bipartite, two fields adjacency, else intervals.
std::string detect_format(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> f;
        for (std::string w; fields >> w;) f.push_back(w);
        if (f.empty()) continue;
        if (f[0].rfind("X=", 0) == 0) return "bipartite";
        if (f.size() == 2) return "adj";
        return "interval";
    }
    return "interval";
}

using Loaded = std::variant<OrderedGraph, BipartiteConvexGraph>;

Loaded load(const std::string& path, std::string format) {
    const std::string text = read_all(path);
    if (format == "auto") format = detect_format(text);
    std::istringstream in(text);
    if (format == "interval") return build_ordering(IntervalModel::parse(in));
    if (format == "adj") return AdjacencyInput::parse(in).to_graph();
    return BipartiteConvexGraph::parse(in);
}

OrderedGraph load_interval(const std::string& path, const std::string& format) {
    Loaded l = load(path, format);
    if (auto* g = std::get_if<OrderedGraph>(&l)) return std::move(*g);
    throw UsageError("expected an interval graph, got a bipartite graph");
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            out_ = &fallback;
        } else {
            file_.open(path, std::ios::binary);
            if (!file_) throw UsageError("cannot write '" + path + "'");
            out_ = &file_;
        }
    }
    std::ostream& operator*() { return *out_; }
    [[nodiscard]] bool to_file() const { return out_ == &file_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

// `key=value` tokens, keys restricted to `allowed`.
std::map<std::string, std::string> key_values(const std::vector<std::string>& tokens,
                                              const std::vector<std::string>& allowed,
                                              const std::string& flag) {
    std::map<std::string, std::string> out;
    for (const auto& t : tokens) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw UsageError(flag + ": expected key=value, got '" + t + "'");
        const std::string key = t.substr(0, eq);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw UsageError(flag + ": unknown key '" + key + "'");
        }
        out[key] = t.substr(eq + 1);
    }
    return out;
}

long long to_integer(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError(what + ": not an integer: '" + s + "'");
    return v;
}

void write_trace(std::ostream& err, const std::vector<TraceEvent>& trace) {
    for (const auto& ev : trace) {
        err << "trace: " << ev.step << ' ' << ev.op << " [" << ev.label << "]";
        for (Vertex v : ev.touched) err << ' ' << v;
        err << '\n';
    }
}

std::string path_text(const BipartiteConvexGraph& g, const BipPath& p) {
    std::string s;
    for (const auto& v : p) {
        if (!s.empty()) s += ' ';
        s += g.label(v);
    }
    return s;
}

std::optional<BipVertex> find_bip_label(const BipartiteConvexGraph& g, const std::string& label) {
    for (int x = 1; x <= g.nx(); ++x) {
        if (g.x_label(x) == label) return BipVertex{Side::X, x};
    }
    for (int y = 1; y <= g.ny(); ++y) {
        if (g.y_label(y) == label) return BipVertex{Side::Y, y};
    }
    return std::nullopt;
}

struct SolveArgs {
    std::string input;
    std::string format = "auto";
    std::optional<int> terminal;
    std::string terminal_label;
    bool hp = false;
    bool trace = false;
    std::string out;
};

int solve_bipartite(const BipartiteConvexGraph& g, const SolveArgs& a, std::ostream& out,
                    std::ostream& err) {
    std::optional<BipVertex> start;
    if (!a.terminal_label.empty()) {
        start = find_bip_label(g, a.terminal_label);
        if (!start) throw UsageError("no vertex labelled '" + a.terminal_label + "'");
    } else if (a.terminal) {
        if (*a.terminal < 1 || *a.terminal > g.ny()) throw UsageError("--terminal must name a Y position");
        start = BipVertex{Side::Y, *a.terminal};
    }
    std::vector<std::string> notes;
    std::optional<BipPath> path;
    const bool bi = g.convexity() == Convexity::Biconvex;
    if (!start) {
        path = bi ? hp_biconvex(g, &notes) : hp_xconvex(g);
    } else if (bi) {
        if (start->side != Side::Y) throw StartNotInY("the start vertex must lie in Y");
        path = onehp_biconvex(g, start->index);
    } else {
        path = onehp_xconvex(g, *start);
    }
    if (a.trace) {
        for (const auto& n : notes) err << "note: " << n << '\n';
    }
    Output o(a.out, out);
    const std::string key = start ? "1hp" : "hp";
    *o << key << '=' << (path ? "yes" : "no") << '\n';
    if (path) *o << "path: " << path_text(g, *path) << '\n';
    if (o.to_file()) out << key << '=' << (path ? "yes" : "no") << '\n';
    return kExitOk;
}

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    Loaded loaded = load(a.input, a.format);
    if (auto* bg = std::get_if<BipartiteConvexGraph>(&loaded)) return solve_bipartite(*bg, a, out, err);
    const OrderedGraph& g = std::get<OrderedGraph>(loaded);
    std::optional<Vertex> terminal;
    if (!a.terminal_label.empty()) {
        terminal = g.find_label(a.terminal_label);
        if (!terminal) throw UsageError("no vertex labelled '" + a.terminal_label + "'");
    } else if (a.terminal) {
        if (*a.terminal < 1 || *a.terminal > g.n()) {
            throw UsageError("--terminal " + std::to_string(*a.terminal) + " outside 1.." + std::to_string(g.n()));
        }
        terminal = *a.terminal;
    }
    SolveOptions opts;
    opts.trace = a.trace;
    const SolveResult res = solve_1pc_detailed(g, terminal, opts);
    if (a.trace) write_trace(err, res.trace);

    Output o(a.out, out);
    res.cover.write(*o);
    std::string hp_line;
    if (a.hp) hp_line = std::string(terminal ? "1hp" : "hp") + '=' + (res.cover.lambda() == 1 ? "yes" : "no");
    if (o.to_file()) {
        out << "lambda=" << res.cover.lambda() << '\n';
        if (a.hp) out << hp_line << '\n';
    } else if (a.hp) {
        out << "# " << hp_line << '\n';
    }
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cover_path, const std::string& format,
               bool nesting, std::ostream& out) {
    const OrderedGraph g = load_interval(graph_path, format);
    std::istringstream cin(read_all(cover_path));
    const PathCover cover = PathCover::parse(cin);
    int problems = 0;
    for (const auto& v : validate_cover(g, cover, cover.terminal())) {
        out << to_string(v.kind) << ": " << v.message << '\n';
        ++problems;
    }
    if (nesting) {
        if (auto nv = check_nesting(cover)) {
            out << "NestingViolation: endpoint " << nv->offending_endpoint << " of path P"
                << nv->inner_path + 1 << " lies inside path P" << nv->outer_path + 1 << '\n';
            ++problems;
        }
    }
    if (problems == 0) {
        out << "ok lambda=" << cover.lambda() << " d=" << d_connectivity(cover) << '\n';
        return kExitOk;
    }
    return kExitViolations;
}

struct OracleArgs {
    std::vector<std::string> inputs;
    std::string exhaustive;
    std::vector<std::string> random;
    std::optional<std::uint64_t> seed;
    std::optional<long long> index;
    bool prefix = false;
    bool json = false;
    int threads = 1;
    std::string out;
    std::string append_failures;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
    std::vector<DiffInstance> instances;
    if (!a.exhaustive.empty()) {
        const std::string v = a.exhaustive.rfind("n=", 0) == 0 ? a.exhaustive.substr(2) : a.exhaustive;
        const long long n = to_integer(v, "--exhaustive");
        if (n < 0) throw UsageError("--exhaustive: n must be non-negative");
        if (n > OracleLimits{}.min_size_bound) throw InstanceTooLarge("n=" + v + " exceeds the oracle bound");
        auto part = exhaustive_instances(static_cast<int>(n));
        instances.insert(instances.end(), part.begin(), part.end());
    }
    if (!a.random.empty()) {
        auto kv = key_values(a.random, {"count", "n", "seed"}, "--random");
        const long long count = kv.count("count") ? to_integer(kv["count"], "count") : 1;
        if (!kv.count("n")) throw UsageError("--random needs n=<k>");
        const long long n = to_integer(kv["n"], "n");
        if (count < 0 || n < 0) throw UsageError("--random: values must be non-negative");
        std::uint64_t seed = 1;
        if (kv.count("seed")) seed = static_cast<std::uint64_t>(to_integer(kv["seed"], "seed"));
        if (a.seed) seed = *a.seed;
        if (n > OracleLimits{}.min_size_bound) throw InstanceTooLarge("n=" + kv["n"] + " exceeds the oracle bound");
        auto part = random_instances(static_cast<int>(count), static_cast<int>(n), seed);
        instances.insert(instances.end(), part.begin(), part.end());
    }
    for (const auto& path : a.inputs) {
        std::istringstream in(read_all(path));
        auto part = read_corpus(in);
        instances.insert(instances.end(), part.begin(), part.end());
    }
    if (a.index) {
        if (*a.index < 0 || *a.index >= static_cast<long long>(instances.size())) {
            throw UsageError("--index " + std::to_string(*a.index) + " outside 0.." +
                             std::to_string(static_cast<long long>(instances.size()) - 1));
        }
        instances = {instances[static_cast<std::size_t>(*a.index)]};
    }
    DiffOptions opts;
    opts.prefix_mode = a.prefix;
    opts.threads = a.threads;
    const DiffReport report = diff_engine_vs_oracle(instances, opts);

    Output o(a.out, out);
    if (a.json) {
        report.write_json(*o);
    } else {
        report.write_text(*o);
    }
    if (!a.append_failures.empty() && !report.ok()) {
        std::ofstream corpus(a.append_failures, std::ios::app);
        if (!corpus) throw UsageError("cannot append to '" + a.append_failures + "'");
        std::size_t last = static_cast<std::size_t>(-1);
        for (const auto& m : report.mismatches) {
            if (m.instance == last) continue;
            last = m.instance;
            append_corpus(corpus, instances[m.instance].name, instances[m.instance].graph);
        }
    }
    return report.ok() ? kExitOk : kExitViolations;
}

struct BenchArgs {
    std::vector<int> sizes{1000, 2000, 4000};
    int reps = 5;
    std::uint64_t seed = 1;
    double density = 0.5;
    std::string terminal = "middle";
    bool no_times = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    BenchTerminal t = BenchTerminal::Middle;
    if (a.terminal == "none") t = BenchTerminal::None;
    else if (a.terminal == "first") t = BenchTerminal::First;
    else if (a.terminal == "last") t = BenchTerminal::Last;
    const BenchResult r = run_bench(a.sizes, a.reps, a.seed, a.density, t);
    out << std::setw(8) << "n" << std::setw(12) << "edges" << std::setw(8) << "lambda";
    if (!a.no_times) out << std::setw(12) << "solve_ms" << std::setw(12) << "total_ms";
    out << '\n';
    out << std::fixed << std::setprecision(3);
    for (const auto& row : r.rows) {
        out << std::setw(8) << row.n << std::setw(12) << row.edges << std::setw(8) << row.lambda;
        if (!a.no_times) out << std::setw(12) << row.solve_ms << std::setw(12) << row.total_ms;
        out << '\n';
    }
    if (!a.no_times) {
        if (r.solve_exponent) out << "exponent solve=" << *r.solve_exponent << " total=" << *r.total_exponent << '\n';
        else out << "exponent n/a\n";
    }
    return kExitOk;
}

struct GenArgs {
    std::string kind = "interval";
    int n = 10;
    int m = 10;
    double density = 0.5;
    std::uint64_t seed = 1;
    int count = 1;
    std::string out;
};

std::string numbered_path(const std::string& path, int k) {
    const auto slash = path.find_last_of('/');
    const auto dot = path.find_last_of('.');
    std::ostringstream s;
    s << std::setw(4) << std::setfill('0') << k;
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + "-" + s.str();
    return path.substr(0, dot) + "-" + s.str() + path.substr(dot);
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
    GenSpec spec;
    spec.kind = a.kind == "biconvex" ? GenKind::Biconvex : GenKind::Interval;
    spec.n = a.n;
    spec.m = a.m;
    spec.density = a.density;
    spec.seed = a.seed;
    spec.count = a.count;
    try {
        spec.check();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (int k = 0; k < spec.count; ++k) {
        Rng rng(spec.seed + static_cast<std::uint64_t>(k));
        std::ostringstream text;
        if (spec.kind == GenKind::Interval) {
            gen_interval(spec.n, spec.density, rng).write(text);
        } else {
            gen_biconvex(spec.n, spec.m, spec.density, rng).write(text);
        }
        if (a.out.empty() || a.out == "-") {
            if (spec.count > 1) out << "# instance " << k << " seed=" << spec.seed + static_cast<std::uint64_t>(k) << '\n';
            out << text.str();
        } else {
            const std::string path = spec.count > 1 ? numbered_path(a.out, k) : a.out;
            std::ofstream f(path, std::ios::binary);
            if (!f) throw UsageError("cannot write '" + path + "'");
            f << text.str();
        }
    }
    return kExitOk;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

std::optional<double> loglog_slope(const std::vector<BenchRow>& rows, double BenchRow::*field) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) {
        if (r.n > 0 && r.*field > 0.0) pts.emplace_back(std::log(r.n), std::log(r.*field));
    }
    if (pts.size() < 2) return std::nullopt;
    double sx = 0, sy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double mx = sx / static_cast<double>(pts.size());
    const double my = sy / static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

}  // namespace

BenchResult run_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed, double density,
                      BenchTerminal terminal) {
    using Clock = std::chrono::steady_clock;
    BenchResult result;
    for (int n : sizes) {
        BenchRow row;
        row.n = n;
        std::vector<double> solve, total;
        for (int r = 0; r < std::max(1, reps); ++r) {
            Rng rng(seed + static_cast<std::uint64_t>(r));
            const IntervalModel model = gen_interval(n, density, rng);
            const auto t0 = Clock::now();
            const OrderedGraph g = build_ordering(model);
            std::optional<Vertex> t;
            if (n > 0) {
                if (terminal == BenchTerminal::First) t = 1;
                if (terminal == BenchTerminal::Middle) t = (n + 1) / 2;
                if (terminal == BenchTerminal::Last) t = n;
            }
            const auto t1 = Clock::now();
            const PathCover cover = solve_1pc(g, t);
            const auto t2 = Clock::now();
            solve.push_back(std::chrono::duration<double, std::milli>(t2 - t1).count());
            total.push_back(std::chrono::duration<double, std::milli>(t2 - t0).count());
            row.edges = g.edge_count();
            row.lambda = cover.lambda();
            result.lambdas.push_back(cover.lambda());
        }
        row.solve_ms = median(solve);
        row.total_ms = median(total);
        result.rows.push_back(row);
    }
    result.solve_exponent = loglog_slope(result.rows, &BenchRow::solve_ms);
    result.total_exponent = loglog_slope(result.rows, &BenchRow::total_ms);
    return result;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum 1-fixed-endpoint path covers of interval graphs", "ipc"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"auto", "interval", "adj", "bipartite"};

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Minimum 1PC of a graph; HP/1HP for bipartite input");
    solve->add_option("input", sa.input, "Graph file, - for stdin")->required();
    solve->add_option("--format", sa.format, "Input format")->check(CLI::IsMember(formats));
    solve->add_option("--terminal", sa.terminal, "Terminal as a position in the interval ordering (Y position for bipartite)");
    solve->add_option("--terminal-label", sa.terminal_label, "Terminal by its input label");
    solve->add_flag("--hp", sa.hp, "Also answer whether a Hamiltonian path (from the terminal) exists");
    solve->add_flag("--trace", sa.trace, "Print the engine's steps to stderr");
    solve->add_option("--out", sa.out, "Write the cover here instead of stdout");

    std::string v_graph, v_cover, v_format = "auto";
    bool v_no_nesting = false;
    auto* verify = app.add_subcommand("verify", "Check a cover against a graph");
    verify->add_option("graph", v_graph)->required();
    verify->add_option("cover", v_cover)->required();
    verify->add_option("--format", v_format, "Graph format")->check(CLI::IsMember({"auto", "interval", "adj"}));
    verify->add_flag("--no-nesting", v_no_nesting, "Skip the endpoint non-nesting check");

    OracleArgs oa;
    auto* oracle = app.add_subcommand("oracle", "Compare the engine with the brute-force oracle");
    oracle->add_option("corpus", oa.inputs, "Corpus files");
    oracle->add_option("--exhaustive", oa.exhaustive, "Every ordered interval graph on n vertices: n=<k>");
    oracle->add_option("--random", oa.random, "Random instances: count=<c> n=<k> [seed=<s>]")->expected(1, 3);
    oracle->add_option("--seed", oa.seed, "Seed for --random");
    oracle->add_option("--index", oa.index, "Only the instance at this position");
    oracle->add_flag("--prefix", oa.prefix, "Also compare after every processed vertex");
    oracle->add_flag("--json", oa.json, "JSON report");
    oracle->add_option("--threads", oa.threads, "Worker threads")->check(CLI::Range(1, 256));
    oracle->add_option("--out", oa.out, "Write the report here");
    oracle->add_option("--append-failures", oa.append_failures, "Append mismatching instances to this corpus");

    BenchArgs ba;
    auto* bench = app.add_subcommand("bench", "Median solve times on random dense models");
    bench->add_option("--sizes", ba.sizes, "Vertex counts")->delimiter(',');
    bench->add_option("--reps", ba.reps, "Repetitions per size")->check(CLI::PositiveNumber);
    bench->add_option("--seed", ba.seed);
    bench->add_option("--density", ba.density)->check(CLI::Range(0.0, 1.0));
    bench->add_option("--terminal", ba.terminal)->check(CLI::IsMember({"none", "first", "middle", "last"}));
    bench->add_flag("--no-times", ba.no_times, "Omit timings (reproducible output)");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Random instances");
    gen->add_option("--kind", ga.kind)->check(CLI::IsMember({"interval", "biconvex"}));
    gen->add_option("--n", ga.n, "Vertices (|X| for biconvex)");
    gen->add_option("--m", ga.m, "|Y| for biconvex");
    gen->add_option("--density", ga.density);
    gen->add_option("--seed", ga.seed);
    gen->add_option("--count", ga.count);
    gen->add_option("--out", ga.out, "Output file; numbered when count > 1");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*solve) return cmd_solve(sa, out, err);
        if (*verify) return cmd_verify(v_graph, v_cover, v_format, !v_no_nesting, out);
        if (*oracle) return cmd_oracle(oa, out);
        if (*bench) return cmd_bench(ba, out);
        if (*gen) return cmd_gen(ga, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const OrderingViolation& e) {
        err << e.what() << '\n';
        return kExitOrdering;
    } catch (const ConvexityViolation& e) {
        err << "convexity violation: " << e.what() << '\n';
        return kExitOrdering;
    } catch (const InstanceTooLarge& e) {
        err << "instance too large: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const UnsupportedCase& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const StartNotInY& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace ipc
