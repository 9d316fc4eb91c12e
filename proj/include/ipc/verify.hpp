#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipc/ordered_graph.hpp"
#include "ipc/path_cover.hpp"

namespace ipc {

enum class ViolationKind {
    Coverage,        // vertex missing or out of range
    Disjointness,    // vertex on two paths (or twice on one)
    Adjacency,       // consecutive path vertices not adjacent
    Terminal,        // terminal not an endpoint, or path kinds inconsistent with it
    DConnectivity,   // sum of path degrees != 2(n - lambda)
    Size,            // n or lambda inconsistent with the graph/paths
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

[[nodiscard]] const char* to_string(ViolationKind kind);

// Returns every problem found; empty means the cover is a valid 1PC of g for `terminal`.
[[nodiscard]] std::vector<Violation> validate_cover(const OrderedGraph& g, const PathCover& cover,
                                                    std::optional<Vertex> terminal);

struct NestingViolation {
    int outer_path;  // 0-based index into cover.paths()
    int inner_path;
    Vertex offending_endpoint;  // endpoint of inner strictly between the ends of outer
};

// Endpoint non-nesting: no endpoint of one path lies strictly between the two endpoints of
// another. With a terminal only pairs of free paths are checked.
[[nodiscard]] std::optional<NestingViolation> check_nesting(const PathCover& cover);

// Sum over vertices of their degree inside the cover's paths.
[[nodiscard]] long long d_connectivity(const PathCover& cover);

enum class EpsilonCount {
    DistinctPaths,  // a path counts once if any endpoint is in range
    Endpoints,      // every endpoint counts; a trivial path counts twice
};

// profile[k] = number of paths (or endpoints) with an endpoint of index in (k, n], k = 0..n.
[[nodiscard]] std::vector<int> epsilon_profile(const PathCover& cover,
                                               EpsilonCount mode = EpsilonCount::DistinctPaths);

// Index of the rightmost path endpoint (0 for an empty cover).
[[nodiscard]] Vertex rightmost_endpoint(const PathCover& cover);

}  // namespace ipc
