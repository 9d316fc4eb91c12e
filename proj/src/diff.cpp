#include "ipc/diff.hpp"

#include <atomic>
#include <exception>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ipc/errors.hpp"
#include "ipc/generators.hpp"
#include "ipc/oracle.hpp"
#include "ipc/verify.hpp"

namespace ipc {

namespace {

OrderedGraph prefix_graph(const OrderedGraph& g, int i) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (u <= i && v <= i) edges.emplace_back(u, v);
    }
    return OrderedGraph::from_edges(i, edges);
}

std::string adjacency_text(const OrderedGraph& g) {
    std::ostringstream out;
    write_adjacency(out, g);
    return out.str();
}

struct InstanceResult {
    std::size_t checks = 0;
    std::vector<Mismatch> mismatches;
};

InstanceResult check_instance(std::size_t index, const DiffInstance& inst, const DiffOptions& options) {
    const OrderedGraph& g = inst.graph;
    const int n = g.n();
    InstanceResult out;
    // Plain minimum cover sizes of each prefix, shared by all terminals beyond it.
    std::vector<int> free_prefix(static_cast<std::size_t>(n) + 1, 0);
    std::vector<OrderedGraph> prefixes;
    if (options.prefix_mode) {
        prefixes.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) prefixes.push_back(i == n ? g : prefix_graph(g, i));
        for (int i = 1; i <= n; ++i) free_prefix[i] = oracle_min_cover(prefixes[i], std::nullopt).min_size;
    }
    for (int t = 0; t <= n; ++t) {
        std::optional<Vertex> terminal;
        if (t > 0) terminal = t;
        const SolveResult res = solve_1pc_detailed(g, terminal);
        auto report = [&](int prefix, int engine, int oracle) {
            Mismatch m;
            m.instance = index;
            m.name = inst.name;
            m.terminal = terminal;
            m.prefix = prefix;
            m.engine = engine;
            m.oracle = oracle;
            m.repro = inst.repro;
            m.graph = adjacency_text(g);
            SolveOptions traced;
            traced.trace = true;
            m.trace = solve_1pc_detailed(g, terminal, traced).trace;
            out.mismatches.push_back(std::move(m));
        };
        const int want = oracle_min_cover(g, terminal).min_size;
        ++out.checks;
        const bool valid = validate_cover(g, res.cover, terminal).empty();
        // An invalid cover is reported with engine size -1.
        if (!valid) {
            report(n, -1, want);
        } else if (res.cover.lambda() != want) {
            report(n, res.cover.lambda(), want);
        }
        if (!options.prefix_mode) continue;
        for (int i = 1; i < n; ++i) {
            const int expect = t >= 1 && t <= i ? oracle_min_cover(prefixes[i], terminal).min_size
                                               : free_prefix[i];
            ++out.checks;
            if (res.prefix_lambda[i] != expect) report(i, res.prefix_lambda[i], expect);
        }
    }
    return out;
}

std::string terminal_text(const std::optional<Vertex>& t) {
    return t ? std::to_string(*t) : std::string("none");
}

}  // namespace

DiffReport diff_engine_vs_oracle(const std::vector<DiffInstance>& instances, const DiffOptions& options) {
    DiffReport report;
    report.instances = instances.size();
    std::vector<InstanceResult> results(instances.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= instances.size()) return;
            try {
                results[k] = check_instance(k, instances[k], options);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = instances.size();
                return;
            }
        }
    };
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& r : results) {
        report.checks += r.checks;
        for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
    }
    return report;
}

void DiffReport::write_text(std::ostream& out) const {
    out << "instances=" << instances << " checks=" << checks << " mismatches=" << mismatches.size()
        << '\n';
    for (const auto& m : mismatches) {
        out << "MISMATCH " << m.name << " terminal=" << terminal_text(m.terminal) << " prefix=" << m.prefix
            << " engine=" << m.engine << " oracle=" << m.oracle << '\n';
        out << "  repro: " << m.repro << '\n';
        std::istringstream g(m.graph);
        for (std::string line; std::getline(g, line);) out << "  graph: " << line << '\n';
        for (const auto& ev : m.trace) {
            out << "  trace: " << ev.step << ' ' << ev.op << " [" << ev.label << "]";
            for (Vertex v : ev.touched) out << ' ' << v;
            out << '\n';
        }
    }
}

void DiffReport::write_json(std::ostream& out) const {
    nlohmann::json j;
    j["instances"] = instances;
    j["checks"] = checks;
    j["mismatches"] = nlohmann::json::array();
    for (const auto& m : mismatches) {
        nlohmann::json e;
        e["instance"] = m.instance;
        e["name"] = m.name;
        e["terminal"] = m.terminal ? nlohmann::json(*m.terminal) : nlohmann::json(nullptr);
        e["prefix"] = m.prefix;
        e["engine"] = m.engine;
        e["oracle"] = m.oracle;
        e["repro"] = m.repro;
        e["graph"] = m.graph;
        auto& tr = e["trace"] = nlohmann::json::array();
        for (const auto& ev : m.trace) {
            tr.push_back({{"step", ev.step}, {"op", ev.op}, {"label", ev.label}, {"touched", ev.touched}});
        }
        j["mismatches"].push_back(std::move(e));
    }
    out << j.dump(2) << '\n';
}

std::vector<DiffInstance> exhaustive_instances(int n) {
    std::vector<DiffInstance> out;
    std::size_t k = 0;
    for_each_ordered_interval_graph(n, [&](const OrderedGraph& g) {
        out.push_back({"exhaustive-n" + std::to_string(n) + "-" + std::to_string(k),
                       g, "ipc oracle --exhaustive n=" + std::to_string(n) + " --index " + std::to_string(k)});
        ++k;
        return true;
    });
    return out;
}

std::vector<DiffInstance> random_instances(int count, int n, std::uint64_t seed) {
    std::vector<DiffInstance> out;
    out.reserve(static_cast<std::size_t>(std::max(0, count)));
    for (int k = 0; k < count; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        Rng rng(s);
        out.push_back({"random-n" + std::to_string(n) + "-seed" + std::to_string(s), gen_test_graph(n, rng),
                       "ipc oracle --random count=1 n=" + std::to_string(n) + " --seed " + std::to_string(s)});
    }
    return out;
}

std::vector<DiffInstance> read_corpus(std::istream& in) {
    std::vector<DiffInstance> out;
    std::string line;
    int line_no = 0;
    std::optional<std::string> name;
    std::ostringstream body;
    int body_start = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (first == "instance") {
            if (name) throw ParseError(line_no, "'instance' inside an open block");
            std::string rest;
            std::getline(fields >> std::ws, rest);
            if (rest.empty()) throw ParseError(line_no, "instance needs a name");
            name = rest;
            body.str("");
            body_start = line_no;
        } else if (first == "end") {
            if (!name) throw ParseError(line_no, "'end' without 'instance'");
            std::istringstream graph(body.str());
            try {
                const OrderedGraph g = AdjacencyInput::parse(graph).to_graph();
                out.push_back({*name, g, "corpus entry '" + *name + "'"});
            } catch (const ParseError& e) {
                throw ParseError(body_start + std::max(0, e.line()), e.what());
            }
            name.reset();
        } else if (name) {
            body << line << '\n';
        } else if (!first.empty() && first[0] != '#') {
            throw ParseError(line_no, "text outside an instance block");
        }
    }
    if (name) throw ParseError(line_no, "unterminated instance '" + *name + "'");
    return out;
}

void append_corpus(std::ostream& out, const std::string& name, const OrderedGraph& g) {
    out << "instance " << name << '\n';
    write_adjacency(out, g);
    out << "end\n";
}

}  // namespace ipc
