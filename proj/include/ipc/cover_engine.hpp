#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ipc/ordered_graph.hpp"
#include "ipc/path_cover.hpp"

namespace ipc {

// Partial cover of the prefix v_1..v_i. Paths are kept as a doubly linked structure
// (each vertex knows its up to two path neighbours) plus an endpoint record per path.
// The terminal path's record always lists the terminal first.
class CoverState {
public:
    struct Ends {
        Vertex a = kNoVertex;
        Vertex b = kNoVertex;
        [[nodiscard]] bool trivial() const { return a == b; }
        [[nodiscard]] Vertex other(Vertex e) const { return e == a ? b : a; }
    };

    CoverState(const OrderedGraph& g, std::optional<Vertex> terminal);

    [[nodiscard]] const OrderedGraph& graph() const { return *g_; }
    [[nodiscard]] std::optional<Vertex> terminal() const { return terminal_; }
    [[nodiscard]] int lambda() const { return static_cast<int>(ends_.size()); }
    [[nodiscard]] const std::vector<Ends>& ends() const { return ends_; }
    // Index into ends() of the path holding the terminal, -1 before it is placed.
    [[nodiscard]] int terminal_path() const { return tpath_; }
    [[nodiscard]] bool placed(Vertex v) const { return placed_[v]; }
    [[nodiscard]] const std::array<Vertex, 2>& links(Vertex v) const { return link_[v]; }
    // Path index whose endpoint is e, -1 if e is not an endpoint. O(lambda).
    [[nodiscard]] int path_of_end(Vertex e) const;
    // Endpoints of path p that may still receive an edge. The terminal is excluded unless
    // it forms a trivial path by itself.
    [[nodiscard]] std::vector<Vertex> free_ends(int p) const;

    // The five editing operations. Each throws InternalInvariantViolation when its
    // precondition does not hold.
    void connect(Vertex e, Vertex v);
    void insert(Vertex a, Vertex b, Vertex v);
    void bridge(Vertex e1, Vertex v, Vertex e2);
    void new_path(Vertex v);
    // Removes path edge (vj, cut) and attaches v to vj; lambda grows by one.
    void new_path(Vertex v, Vertex vj, Vertex cut);
    // As the split form of new_path, then also joins v to the free endpoint va of another
    // path, so lambda is unchanged.
    void connect_break(Vertex v, Vertex vj, Vertex cut, Vertex va);

    // Full structural check of the prefix 1..upto: disjointness, coverage, edges, terminal
    // at an endpoint, endpoint records consistent with the links.
    void check_invariants(Vertex upto) const;

    [[nodiscard]] PathCover to_cover() const;

private:
    void place(Vertex v);
    void link(Vertex u, Vertex v);
    void unlink(Vertex u, Vertex v);
    void require(bool ok, const std::string& what) const;
    void require_free_end(Vertex e, const char* op) const;
    // Walks from endpoint `from` along the path; returns the far endpoint.
    [[nodiscard]] Vertex walk_to_end(Vertex from, Vertex prev) const;
    void set_ends(int p, Vertex x, Vertex y);
    void remove_path(int p);

    const OrderedGraph* g_;
    std::optional<Vertex> terminal_;
    std::vector<std::array<Vertex, 2>> link_;
    std::vector<char> placed_;
    std::vector<Ends> ends_;
    int tpath_ = -1;
};

struct TraceEvent {
    Vertex step = kNoVertex;
    std::string op;     // connect, insert, bridge, new_path
    std::string label;  // which rule produced the move
    std::vector<Vertex> touched;
};

struct SolveOptions {
    bool trace = false;
    // O(n) structural check after every step; for tests.
    bool check_invariants = false;
};

struct SolveResult {
    PathCover cover;
    // prefix_lambda[i] = minimum 1PC size of G[v_1..v_i], with the terminal counted only
    // once i >= t. Index 0 holds 0.
    std::vector<int> prefix_lambda;
    std::vector<TraceEvent> trace;  // events of the branch that produced `cover`
    std::size_t max_branches = 0;
};

// Minimum 1-fixed-endpoint path cover. With no terminal this is a minimum path cover.
[[nodiscard]] PathCover solve_1pc(const OrderedGraph& g, std::optional<Vertex> terminal);
[[nodiscard]] SolveResult solve_1pc_detailed(const OrderedGraph& g, std::optional<Vertex> terminal,
                                             const SolveOptions& options = {});
[[nodiscard]] PathCover min_path_cover(const OrderedGraph& g);

}  // namespace ipc
