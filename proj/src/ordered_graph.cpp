#include "ipc/ordered_graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ipc/errors.hpp"

namespace ipc {

OrderedGraph::OrderedGraph(int n, std::span<const Edge> edges, std::vector<std::string> labels,
                           std::vector<int> source_index, OrderingOrigin origin)
    : n_(n),
      words_(static_cast<std::size_t>(n) / 64 + 1),
      origin_(origin),
      adj_(static_cast<std::size_t>(n) + 1),
      rows_((static_cast<std::size_t>(n) + 1) * words_, 0),
      leftmost_(static_cast<std::size_t>(n) + 1, kNoVertex),
      labels_(std::move(labels)),
      source_index_(std::move(source_index)) {
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self loop on vertex " + std::to_string(u));
        if (adjacent(u, v)) {
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        }
        rows_[row_offset(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        rows_[row_offset(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++edge_count_;
    }
    for (Vertex v = 1; v <= n; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        if (!adj_[v].empty() && adj_[v].front() < v) leftmost_[v] = adj_[v].front();
    }
}

// The lower neighbors of every vertex must form one contiguous run ending just below it.
void OrderedGraph::check_ordering() const {
    for (Vertex k = 1; k <= n_; ++k) {
        const Vertex i = leftmost_[k];
        if (i == kNoVertex) continue;
        const auto lower = std::lower_bound(adj_[k].begin(), adj_[k].end(), k) - adj_[k].begin();
        if (lower == k - i) continue;
        for (Vertex j = i + 1; j < k; ++j) {
            if (!adjacent(j, k)) throw OrderingViolation(i, j, k);
        }
    }
}

std::optional<Vertex> OrderedGraph::find_label(const std::string& label) const {
    for (Vertex v = 1; v <= n_; ++v) {
        if (labels_[v] == label) return v;
    }
    return std::nullopt;
}

std::vector<Edge> OrderedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 1; u <= n_; ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

OrderedGraph OrderedGraph::from_edges(int n, std::span<const Edge> edges) {
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    return validate_ordering(n, edges, identity);
}

OrderedGraph build_ordering(const IntervalModel& model) {
    const int n = static_cast<int>(model.size());
    std::vector<int> order(model.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& x = model[a];
        const auto& y = model[b];
        if (x.right != y.right) return x.right < y.right;
        return x.left < y.left;
    });

    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            // Sorted by right end, so b's interval reaches at least as far right as a's.
            if (!(model[order[a]].right < model[order[b]].left)) edges.emplace_back(a + 1, b + 1);
        }
    }

    std::vector<std::string> labels{""};
    std::vector<int> source{-1};
    for (int idx : order) {
        labels.push_back(model[idx].id);
        source.push_back(idx);
    }
    OrderedGraph g(n, edges, std::move(labels), std::move(source), OrderingOrigin::FromModel);
#ifndef NDEBUG
    g.check_ordering();
#endif
    return g;
}

OrderedGraph validate_ordering(int n, std::span<const Edge> edges,
                               std::span<const int> claimed_order) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (static_cast<int>(claimed_order.size()) != n) {
        throw std::invalid_argument("claimed ordering has wrong length");
    }
    // position[original] = claimed index
    std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) {
        const int original = claimed_order[k];
        if (original < 1 || original > n || position[original] != 0) {
            throw std::invalid_argument("claimed ordering is not a permutation of 1..n");
        }
        position[original] = k + 1;
    }
    std::vector<Edge> renumbered;
    renumbered.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        renumbered.emplace_back(position[u], position[v]);
    }
    std::vector<std::string> labels{""};
    std::vector<int> source{-1};
    for (int original : claimed_order) {
        labels.push_back(std::to_string(original));
        source.push_back(original);
    }
    OrderedGraph g(n, renumbered, std::move(labels), std::move(source),
                   OrderingOrigin::ClaimedAndValidated);
    g.check_ordering();
    return g;
}

OrderedGraph AdjacencyInput::to_graph() const {
    if (claimed_order) return validate_ordering(n, edges, *claimed_order);
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 1);
    return validate_ordering(n, edges, identity);
}

AdjacencyInput AdjacencyInput::parse(std::istream& in) {
    AdjacencyInput result;
    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::size_t declared_edges = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "pi:") {
            if (!have_header) throw ParseError(line_no, "'pi:' line before header");
            if (result.claimed_order) throw ParseError(line_no, "duplicate 'pi:' line");
            std::vector<int> order;
            int v = 0;
            while (fields >> v) order.push_back(v);
            if (!fields.eof()) throw ParseError(line_no, "non-integer entry in 'pi:' line");
            if (static_cast<int>(order.size()) != result.n) {
                throw ParseError(line_no, "'pi:' line must list exactly n vertices");
            }
            result.claimed_order = std::move(order);
            continue;
        }
        std::istringstream all(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(all >> a >> b) || (all >> extra)) throw ParseError(line_no, "expected two integers");
        if (!have_header) {
            if (a < 0 || b < 0) throw ParseError(line_no, "negative header value");
            result.n = static_cast<int>(a);
            declared_edges = static_cast<std::size_t>(b);
            have_header = true;
            continue;
        }
        if (a < 1 || a > result.n || b < 1 || b > result.n) {
            throw ParseError(line_no, "edge endpoint out of range 1.." + std::to_string(result.n));
        }
        if (a == b) throw ParseError(line_no, "self loop");
        result.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (!have_header) throw ParseError(0, "missing 'n m' header");
    if (result.edges.size() != declared_edges) {
        throw ParseError(0, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                std::to_string(result.edges.size()));
    }
    return result;
}

void write_adjacency(std::ostream& out, const OrderedGraph& g) {
    const auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

}  // namespace ipc
