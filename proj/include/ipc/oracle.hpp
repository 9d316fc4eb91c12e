#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ipc/ordered_graph.hpp"
#include "ipc/path_cover.hpp"

namespace ipc {

class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adjacency bitmasks of an arbitrary simple graph on vertices 0..n-1 (n <= 30).
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;

    explicit SmallGraph(int n_) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}
    void add_edge(int u, int v) {
        adj[u] |= std::uint32_t{1} << v;
        adj[v] |= std::uint32_t{1} << u;
    }
    [[nodiscard]] bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
    static SmallGraph from(const OrderedGraph& g);
};

struct OracleLimits {
    int min_size_bound = 12;
    int enumerate_bound = 8;
};

struct OracleResult {
    int min_size = 0;
    PathCover witness;
    std::optional<std::vector<PathCover>> all_optima;
};

// Exact minimum 1PC by dynamic programming over (covered set, last vertex of the open path).
// The terminal is only ever placed as the first vertex of a path. Throws InstanceTooLarge.
OracleResult oracle_min_cover(const OrderedGraph& g, std::optional<Vertex> terminal,
                              bool enumerate_all = false, OracleLimits limits = {});

// Minimum 1PC size of an arbitrary small graph; `terminal` is 0-based.
int oracle_min_size(const SmallGraph& g, std::optional<int> terminal);

// Every minimum 1PC of g, found by backtracking over edge subsets that form linear forests.
std::vector<PathCover> enumerate_optimal_covers(const OrderedGraph& g,
                                                std::optional<Vertex> terminal, int min_size);

// Independent, much slower counter for the number of distinct minimum 1PCs: walks every
// vertex permutation and every way of cutting it into segments. Intended for n <= 6.
std::size_t count_optimal_covers_by_permutation(const OrderedGraph& g,
                                                std::optional<Vertex> terminal);

// Hamiltonian path of an arbitrary small graph, optionally forced to start at `start`
// (0-based). Returns the vertex sequence or nothing.
std::optional<std::vector<int>> find_hamiltonian_path(const SmallGraph& g,
                                                      std::optional<int> start = std::nullopt);

}  // namespace ipc
