#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "ipc/interval_model.hpp"
#include "ipc/ordered_graph.hpp"

namespace ipc {

// Seeded 64-bit generator with platform-independent range reduction.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(span == 0 ? next() : next() % span);
    }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

enum class GenKind { Interval, Biconvex };

struct GenSpec {
    GenKind kind = GenKind::Interval;
    int n = 10;          // interval: vertex count; biconvex: |X|
    int m = 10;          // biconvex: |Y|
    double density = 0.5;  // in [0, 1]
    std::uint64_t seed = 1;
    int count = 1;

    void check() const;  // throws std::invalid_argument
};

// density 0 gives pairwise-disjoint points, density 1 a common point shared by all.
IntervalModel gen_interval(int n, double density, Rng& rng);

// Mixed-regime graph for differential testing: half from interval models with a random
// density, half from random lower-neighbourhood reaches.
OrderedGraph gen_test_graph(int n, Rng& rng);

// Ordered interval graph in which vertex k's lower neighbourhood is [lower_reach[k], k-1];
// lower_reach[k] == k means no lower neighbour. Index 0 is ignored.
OrderedGraph graph_from_lower_reach(std::span<const int> lower_reach);

// Calls `visit` on every ordered interval graph with n vertices, i.e. every choice of
// lower_reach[k] in [1, k] (n! graphs). Stops early if `visit` returns false.
void for_each_ordered_interval_graph(int n, const std::function<bool(const OrderedGraph&)>& visit);

}  // namespace ipc
