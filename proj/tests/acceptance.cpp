// Acceptance suite: one PASS/FAIL line per criterion. `acceptance [k ...]` runs a subset.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ipc/bipartite.hpp"
#include "ipc/cli.hpp"
#include "ipc/cover_engine.hpp"
#include "ipc/diff.hpp"
#include "ipc/generators.hpp"
#include "ipc/oracle.hpp"
#include "ipc/verify.hpp"

using namespace ipc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int threads() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

std::string first_mismatch(const DiffReport& r) {
    if (r.ok()) return "";
    std::ostringstream s;
    const Mismatch& m = r.mismatches.front();
    s << "; first: " << m.name << " terminal=" << (m.terminal ? std::to_string(*m.terminal) : "none")
      << " prefix=" << m.prefix << " engine=" << m.engine << " oracle=" << m.oracle << " repro: " << m.repro;
    return s.str();
}

Outcome exhaustive_small() {
    std::size_t graphs = 0, checks = 0, bad = 0;
    std::string first;
    DiffOptions o;
    o.threads = threads();
    for (int n = 0; n <= 7; ++n) {
        const auto inst = exhaustive_instances(n);
        const DiffReport r = diff_engine_vs_oracle(inst, o);
        graphs += inst.size();
        checks += r.checks;
        bad += r.mismatches.size();
        if (first.empty()) first = first_mismatch(r);
    }
    std::ostringstream s;
    s << "every ordered interval graph on n<=7 (" << graphs << " graphs), all terminals: " << checks
      << " checks, " << bad << " mismatches" << first;
    return {bad == 0 && graphs == 5914, s.str()};
}

Outcome random_small() {
    // 834 instances for each n = 1..12; the first 100 of each size also run in prefix mode.
    std::size_t instances = 0, prefixed = 0, checks = 0, bad = 0;
    std::string first;
    for (int n = 1; n <= 12; ++n) {
        const auto seed = static_cast<std::uint64_t>(1000000 * n);
        const auto all = random_instances(834, n, seed);
        DiffOptions plain;
        plain.threads = threads();
        DiffOptions prefix = plain;
        prefix.prefix_mode = true;
        const std::vector<DiffInstance> head(all.begin(), all.begin() + 100);
        const std::vector<DiffInstance> tail(all.begin() + 100, all.end());
        for (const auto& r : {diff_engine_vs_oracle(head, prefix), diff_engine_vs_oracle(tail, plain)}) {
            checks += r.checks;
            bad += r.mismatches.size();
            if (first.empty()) first = first_mismatch(r);
        }
        instances += all.size();
        prefixed += head.size();
    }
    std::ostringstream s;
    s << instances << " seeded instances n=1..12, all terminals, " << prefixed << " in prefix mode: " << checks
      << " checks, " << bad << " mismatches" << first;
    return {bad == 0 && instances >= 10000 && prefixed >= 1000, s.str()};
}

Outcome epsilon_dominance() {
    Rng rng(314159);
    int instances = 0;
    long long runs = 0, optima = 0, violations = 0;
    std::string first;
    for (int k = 0; k < 2000; ++k) {
        const int n = 1 + static_cast<int>(rng.uniform(0, 7));
        const OrderedGraph g = gen_test_graph(n, rng);
        ++instances;
        for (int t = 0; t <= n; ++t) {
            std::optional<Vertex> term;
            if (t > 0) term = t;
            const PathCover c = solve_1pc(g, term);
            const OracleResult o = oracle_min_cover(g, term, true);
            ++runs;
            if (c.lambda() != o.min_size) {
                ++violations;
                continue;
            }
            const auto mine = epsilon_profile(c, EpsilonCount::Endpoints);
            const Vertex rho = rightmost_endpoint(c);
            for (const auto& other : *o.all_optima) {
                ++optima;
                const auto theirs = epsilon_profile(other, EpsilonCount::Endpoints);
                for (Vertex i = 1; i < rho; ++i) {
                    if (theirs[i] > mine[i]) {
                        ++violations;
                        if (first.empty()) {
                            std::ostringstream s;
                            s << "; first: instance " << k << " terminal " << t << " at i=" << i;
                            first = s.str();
                        }
                        break;
                    }
                }
            }
        }
    }
    std::ostringstream s;
    s << instances << " instances n<=8, " << runs << " terminal choices, " << optima
      << " optimal covers compared (endpoint-counted profiles): " << violations << " violations" << first;
    return {violations == 0 && instances >= 500, s.str()};
}

Outcome structural() {
    Rng rng(2718);
    long long runs = 0, bad = 0;
    std::string first;
    for (int k = 0; k < 10000; ++k) {
        const int n = 1 + static_cast<int>(rng.uniform(0, 199));
        const OrderedGraph g = gen_test_graph(n, rng);
        const PathCover free_cover = min_path_cover(g);
        const Vertex t = static_cast<Vertex>(rng.uniform(1, n));
        for (const auto& [cover, term] :
             {std::pair{free_cover, std::optional<Vertex>{}}, std::pair{solve_1pc(g, t), std::optional<Vertex>{t}}}) {
            ++runs;
            std::string why;
            if (const auto v = validate_cover(g, cover, term); !v.empty()) why = v.front().message;
            else if (check_nesting(cover)) why = "nesting";
            else if (d_connectivity(cover) != 2LL * (n - cover.lambda())) why = "d-connectivity";
            else if (cover.lambda() < free_cover.lambda()) why = "lambda_T < lambda";
            if (!why.empty()) {
                ++bad;
                if (first.empty()) first = "; first: instance " + std::to_string(k) + ": " + why;
            }
        }
    }
    std::ostringstream s;
    s << "10000 instances n<=200, " << runs << " covers (plain and one terminal): " << bad << " violations" << first;
    return {bad == 0, s.str()};
}

Outcome complexity() {
    const BenchResult r = run_bench({1000, 2000, 4000}, 5, 1, 0.5, BenchTerminal::Middle);
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << "dense models, medians of 5:";
    for (const auto& row : r.rows) {
        s << " n=" << row.n << " (" << row.edges << " edges) solve " << row.solve_ms << " ms, total "
          << row.total_ms << " ms;";
    }
    const double solve_exp = r.solve_exponent.value_or(99);
    const double total_exp = r.total_exponent.value_or(99);
    s << " exponent solve " << solve_exp << ", with ordering " << total_exp;
    const bool pass = solve_exp <= 2.4 && r.rows.back().total_ms < 10000.0;
    return {pass, s.str()};
}

Outcome biconvex() {
    long long graphs = 0, queries = 0, bad = 0;
    std::string first;
    auto check = [&](const BipartiteConvexGraph& g) {
        ++graphs;
        auto flag = [&](const std::string& what) {
            ++bad;
            if (first.empty()) {
                std::ostringstream s;
                g.write(s);
                first = "; first: " + what + " on " + s.str();
            }
        };
        ++queries;
        const auto hp = hp_biconvex(g);
        if (hp.has_value() != oracle_hamiltonian_path(g).has_value() || (hp && !is_hamiltonian_path(g, *hp))) {
            flag("HP");
        }
        for (int y = 1; y <= g.ny(); ++y) {
            ++queries;
            const BipVertex start{Side::Y, y};
            const auto p = onehp_biconvex(g, y);
            if (p.has_value() != oracle_hamiltonian_path(g, start).has_value() ||
                (p && !is_hamiltonian_path(g, *p, start))) {
                flag("1HP from y" + std::to_string(y));
            }
        }
    };
    for (int total = 1; total <= 9; ++total) {
        for (int nx = 1; nx <= total; ++nx) {
            for_each_biconvex_graph(nx, total - nx, [&](const BipartiteConvexGraph& g) {
                check(g);
                return true;
            });
        }
    }
    const long long exhaustive = graphs;
    Rng rng(16180);
    for (int k = 0; k < 5000; ++k) {
        const int total = 2 + static_cast<int>(rng.uniform(0, 10));
        const int nx = 1 + static_cast<int>(rng.uniform(0, total - 1));
        check(gen_biconvex(nx, total - nx, rng.unit(), rng));
    }
    std::ostringstream s;
    s << exhaustive << " biconvex graphs with |X|+|Y|<=9 plus " << graphs - exhaustive
      << " random with |X|+|Y|<=12, " << queries << " HP/1HP queries: " << bad << " mismatches" << first;
    return {bad == 0, s.str()};
}

Outcome counterexample() {
    const auto g = find_observation51_counterexample(4);
    if (!g) return {false, "no instance found for |X|=|Y|<=4"};
    const bool sizes = g->nx() == 4 && g->ny() == 4;
    const bool gp = find_hamiltonian_path(SmallGraph::from(convexify(*g, AddedEdges::YEdges).graph)).has_value();
    const bool gh = oracle_hamiltonian_path(*g).has_value();
    const bool algo = hp_biconvex(*g).has_value();
    std::ostringstream s;
    s << "|X|=" << g->nx() << " |Y|=" << g->ny() << " edges";
    for (auto [x, y] : g->edges()) s << ' ' << g->x_label(x) << g->y_label(y);
    s << "; HP(G')=" << (gp ? "yes" : "no") << " HP(G)=" << (gh ? "yes" : "no")
      << " hp_biconvex=" << (algo ? "path" : "none");
    return {sizes && gp && !gh && !algo, s.str()};
}

// Every job below runs twice; outputs are compared byte for byte.
Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / "ipc-acceptance";
    auto run = [&](int round) {
        const fs::path d = dir / std::to_string(round);
        fs::remove_all(d);
        fs::create_directories(d);
        std::vector<std::string> outputs;
        auto cli = [&](std::vector<std::string> args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            outputs.push_back(std::to_string(code) + "\n" + out.str() + err.str());
        };
        auto file = [&](const std::string& name) { return (d / name).string(); };
        auto slurp = [&](const std::string& name) {
            std::ifstream in(file(name), std::ios::binary);
            std::ostringstream s;
            s << in.rdbuf();
            outputs.push_back(s.str());
        };
        cli({"gen", "--n", "300", "--density", "0.3", "--seed", "11", "--out", file("g.txt")});
        slurp("g.txt");
        cli({"solve", file("g.txt"), "--terminal", "150", "--out", file("g.cov")});
        slurp("g.cov");
        cli({"verify", file("g.txt"), file("g.cov")});
        cli({"solve", file("g.txt"), "--trace"});
        cli({"gen", "--kind", "biconvex", "--n", "6", "--m", "6", "--density", "0.6", "--seed", "3", "--count", "5"});
        cli({"gen", "--kind", "biconvex", "--n", "5", "--m", "5", "--density", "0.7", "--seed", "8", "--out", file("b.txt")});
        cli({"solve", file("b.txt"), "--hp"});
        cli({"oracle", "--random", "count=300", "n=9", "seed=42", "--prefix", "--threads", "4", "--json"});
        cli({"oracle", "--exhaustive", "n=5"});
        cli({"bench", "--sizes", "10,100,500", "--reps", "3", "--no-times"});
        std::ostringstream covers;
        Rng rng(77);
        for (int k = 0; k < 300; ++k) {
            const int n = 1 + static_cast<int>(rng.uniform(0, 199));
            const OrderedGraph g = gen_test_graph(n, rng);
            solve_1pc(g, static_cast<Vertex>(rng.uniform(1, n))).write(covers);
        }
        outputs.push_back(covers.str());
        return outputs;
    };
    const auto a = run(1);
    const auto b = run(2);
    fs::remove_all(dir);
    std::size_t same = 0;
    std::size_t bytes = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == b[k]) ++same;
        bytes += a[k].size();
    }
    std::ostringstream s;
    s << same << "/" << a.size() << " job outputs byte-identical across two runs (" << bytes << " bytes)";
    return {same == a.size() && a.size() == b.size(), s.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle equivalence, exhaustive", exhaustive_small},
        {"oracle equivalence, random with prefixes", random_small},
        {"epsilon dominance over all optima", epsilon_dominance},
        {"structural invariants", structural},
        {"running time scaling", complexity},
        {"biconvex HP and 1HP", biconvex},
        {"G' Hamiltonian, G not, at |X|=|Y|=4", counterexample},
        {"determinism", determinism},
    };
    std::set<int> selected;
    for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %d %s: %s [%.1fs] %s\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(), secs,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
