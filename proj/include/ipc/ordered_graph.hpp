#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ipc/interval_model.hpp"

namespace ipc {

// Vertex position in the interval ordering, 1-based. 0 is used as "no vertex".
using Vertex = int;
inline constexpr Vertex kNoVertex = 0;

enum class OrderingOrigin { FromModel, ClaimedAndValidated };

using Edge = std::pair<int, int>;

// Interval graph with its vertices numbered so that i < j < k and ik in E imply jk in E.
// Immutable after construction.
class OrderedGraph {
public:
    OrderedGraph() = default;

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t edge_count() const { return edge_count_; }
    [[nodiscard]] OrderingOrigin origin() const { return origin_; }

    // Sorted ascending.
    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        return (rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
    }
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Smallest neighbor of v with index below v, if any. By the ordering property every
    // vertex strictly between it and v is also a neighbor of v.
    [[nodiscard]] std::optional<Vertex> leftmost_neighbor(Vertex v) const {
        if (leftmost_[v] == kNoVertex) return std::nullopt;
        return leftmost_[v];
    }

    // Label of the vertex in the input (interval id, or original vertex number).
    [[nodiscard]] const std::string& label(Vertex v) const { return labels_[v]; }
    // Position of the vertex in the input (0-based record index for models; original
    // 1-based vertex number for adjacency input).
    [[nodiscard]] int source_index(Vertex v) const { return source_index_[v]; }
    [[nodiscard]] std::optional<Vertex> find_label(const std::string& label) const;

    [[nodiscard]] std::vector<Edge> edges() const;

    // Identity-numbered graph from an edge list (1-based). Throws OrderingViolation when the
    // identity numbering does not have the interval ordering property.
    static OrderedGraph from_edges(int n, std::span<const Edge> edges);

    friend OrderedGraph build_ordering(const IntervalModel& model);
    friend OrderedGraph validate_ordering(int n, std::span<const Edge> edges,
                                          std::span<const int> claimed_order);

private:
    OrderedGraph(int n, std::span<const Edge> edges, std::vector<std::string> labels,
                 std::vector<int> source_index, OrderingOrigin origin);
    [[nodiscard]] std::size_t row_offset(Vertex v) const {
        return static_cast<std::size_t>(v) * words_;
    }
    void check_ordering() const;

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t words_ = 1;
    OrderingOrigin origin_ = OrderingOrigin::FromModel;
    std::vector<std::vector<Vertex>> adj_{1};
    std::vector<std::uint64_t> rows_;
    std::vector<Vertex> leftmost_{kNoVertex};
    std::vector<std::string> labels_{""};
    std::vector<int> source_index_{-1};
};

// Numbers the intervals by ascending right endpoint (ties: left endpoint, then input
// order) and connects intersecting pairs.
OrderedGraph build_ordering(const IntervalModel& model);

// `claimed_order[k-1]` is the original vertex (1-based) that receives position k.
// Throws OrderingViolation(i, j, k) naming positions in the claimed order.
OrderedGraph validate_ordering(int n, std::span<const Edge> edges,
                               std::span<const int> claimed_order);

// Adjacency file: header `n m`, then m lines `u v` (1-based), optional line `pi: i1 ... in`.
struct AdjacencyInput {
    int n = 0;
    std::vector<Edge> edges;
    std::optional<std::vector<int>> claimed_order;

    [[nodiscard]] OrderedGraph to_graph() const;
    static AdjacencyInput parse(std::istream& in);
};

void write_adjacency(std::ostream& out, const OrderedGraph& g);

}  // namespace ipc
