#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipc/cover_engine.hpp"
#include "ipc/ordered_graph.hpp"

namespace ipc {

struct DiffInstance {
    std::string name;
    OrderedGraph graph;
    std::string repro;  // command line that regenerates the instance
};

struct DiffOptions {
    bool prefix_mode = false;  // also compare after every processed vertex
    int threads = 1;
};

struct Mismatch {
    std::size_t instance = 0;  // index into the input stream
    std::string name;
    std::optional<Vertex> terminal;
    int prefix = 0;  // number of processed vertices; equals n for the full graph
    int engine = 0;
    int oracle = 0;
    std::string repro;
    std::string graph;  // adjacency format
    std::vector<TraceEvent> trace;
};

struct DiffReport {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::vector<Mismatch> mismatches;

    [[nodiscard]] bool ok() const { return mismatches.empty(); }
    void write_text(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

// Compares engine and oracle sizes for every terminal choice (none, 1..n). Throws
// InstanceTooLarge when an instance exceeds the oracle bound.
DiffReport diff_engine_vs_oracle(const std::vector<DiffInstance>& instances,
                                 const DiffOptions& options = {});

// Every ordered interval graph on exactly n vertices.
std::vector<DiffInstance> exhaustive_instances(int n);
// Instance k uses seed + k, so `--random count=1 n=<n> --seed <seed + k>` reproduces it.
std::vector<DiffInstance> random_instances(int count, int n, std::uint64_t seed);

// Corpus file: blocks `instance <name>`, an adjacency graph, then `end`. '#' lines are
// comments.
std::vector<DiffInstance> read_corpus(std::istream& in);
void append_corpus(std::ostream& out, const std::string& name, const OrderedGraph& g);

}  // namespace ipc
