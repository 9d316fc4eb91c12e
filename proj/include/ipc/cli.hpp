#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ipc {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitViolations = 1,   // verify found problems, oracle found mismatches
    kExitParse = 2,        // unreadable input or bad command line
    kExitOrdering = 3,     // claimed ordering is not an interval ordering, or not convex
    kExitTooLarge = 4,     // instance beyond the oracle bound
    kExitUnsupported = 5,  // bipartite case that needs two fixed endpoints
};

enum class BenchTerminal { None, First, Middle, Last };

struct BenchRow {
    int n = 0;
    std::size_t edges = 0;     // of the last repetition
    int lambda = 0;            // of the last repetition
    double solve_ms = 0.0;     // median over repetitions, engine only
    double total_ms = 0.0;     // median, ordering plus engine
};

struct BenchResult {
    std::vector<BenchRow> rows;
    // Least-squares slope of log(time) against log(n); empty with fewer than two sizes.
    std::optional<double> solve_exponent;
    std::optional<double> total_exponent;
    // Lambda of every repetition in order, for determinism checks.
    std::vector<int> lambdas;
};

// Repetition r of size n uses the model gen_interval(n, density, Rng(seed + r)).
BenchResult run_bench(const std::vector<int>& sizes, int reps, std::uint64_t seed, double density,
                      BenchTerminal terminal);

// Runs `ipc <args...>` (args excludes the program name) in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipc
