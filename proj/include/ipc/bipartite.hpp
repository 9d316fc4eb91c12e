#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ipc/generators.hpp"
#include "ipc/interval_model.hpp"
#include "ipc/oracle.hpp"
#include "ipc/ordered_graph.hpp"

namespace ipc {

enum class Side { X, Y };
enum class Convexity { XConvex, Biconvex };

class ConvexityViolation : public std::runtime_error {
public:
    ConvexityViolation(Side side, int vertex, const std::string& what)
        : std::runtime_error(what), side_(side), vertex_(vertex) {}
    // The vertex whose neighbourhood is not consecutive (1-based on its side).
    [[nodiscard]] Side side() const { return side_; }
    [[nodiscard]] int vertex() const { return vertex_; }

private:
    Side side_;
    int vertex_;
};

// The requested size/start combination depends on the two-fixed-endpoint problem.
class UnsupportedCase : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class StartNotInY : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BipVertex {
    Side side = Side::X;
    int index = 0;  // 1-based position in its side's ordering
    friend bool operator==(const BipVertex&, const BipVertex&) = default;
};

using BipPath = std::vector<BipVertex>;

// Bipartite graph (X, Y; E) with X ordered so that every N(y) is consecutive, and for
// biconvex graphs Y ordered so that every N(x) is consecutive as well.
class BipartiteConvexGraph {
public:
    BipartiteConvexGraph() = default;
    // Edges are (x, y) pairs of 1-based positions. Throws ConvexityViolation, or
    // std::invalid_argument for out-of-range edges and clashing labels.
    BipartiteConvexGraph(std::vector<std::string> x_labels, std::vector<std::string> y_labels,
                         const std::vector<std::pair<int, int>>& edges, Convexity convexity);
    // Unlabelled graph (x1.., y1..) in which y_k is adjacent to the X run y_runs[k-1]
    // (inclusive; {0, 0} for no neighbours).
    static BipartiteConvexGraph from_y_runs(int nx, const std::vector<std::pair<int, int>>& y_runs,
                                            Convexity convexity);

    [[nodiscard]] int nx() const { return static_cast<int>(x_labels_.size()); }
    [[nodiscard]] int ny() const { return static_cast<int>(y_labels_.size()); }
    [[nodiscard]] Convexity convexity() const { return convexity_; }
    [[nodiscard]] const std::string& x_label(int x) const { return x_labels_[x - 1]; }
    [[nodiscard]] const std::string& y_label(int y) const { return y_labels_[y - 1]; }
    [[nodiscard]] const std::string& label(BipVertex v) const {
        return v.side == Side::X ? x_label(v.index) : y_label(v.index);
    }
    // Sorted positions on the other side.
    [[nodiscard]] const std::vector<int>& x_neighbors(int x) const { return x_nbr_[x - 1]; }
    [[nodiscard]] const std::vector<int>& y_neighbors(int y) const { return y_nbr_[y - 1]; }
    [[nodiscard]] bool adjacent(int x, int y) const;
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;

    // Whether every N(y) (resp. N(x)) is consecutive in the current ordering.
    [[nodiscard]] bool x_convex() const;
    [[nodiscard]] bool y_convex() const;

    // Header `X=<k> Y=<m> convex=<x|bi>`, line `X: <labels in order>`, line
    // `Y: <labels in order>` (required when biconvex), then one `<x> <y>` edge per line.
    static BipartiteConvexGraph parse(std::istream& in);
    void write(std::ostream& out) const;

    // The graph as a SmallGraph: X first (0..nx-1), then Y.
    [[nodiscard]] SmallGraph to_small_graph() const;
    [[nodiscard]] int small_index(BipVertex v) const {
        return v.side == Side::X ? v.index - 1 : nx() + v.index - 1;
    }
    [[nodiscard]] BipVertex from_small_index(int k) const {
        return k < nx() ? BipVertex{Side::X, k + 1} : BipVertex{Side::Y, k - nx() + 1};
    }

private:
    void check_convexity() const;

    std::vector<std::string> x_labels_;
    std::vector<std::string> y_labels_;
    std::vector<std::vector<int>> x_nbr_;
    std::vector<std::vector<int>> y_nbr_;
    Convexity convexity_ = Convexity::XConvex;
};

enum class AddedEdges {
    YEdges,  // join y1, y2 when N(y1) and N(y2) meet; needs X-convexity
    XEdges,  // join x1, x2 when N(x1) and N(x2) meet; needs Y-convexity
};

// The interval graph G' = (X u Y, E u E_side) with the model that witnesses it.
struct Convexified {
    IntervalModel model;
    OrderedGraph graph;
    std::vector<BipVertex> vertex_at;  // by ordered-graph index; [0] unused
    std::vector<Vertex> x_at;          // by X position; [0] unused
    std::vector<Vertex> y_at;          // by Y position; [0] unused

    [[nodiscard]] Vertex at(BipVertex v) const { return v.side == Side::X ? x_at[v.index] : y_at[v.index]; }
};

// Point intervals for the convex side, [min N, max N] for the other. Throws
// ConvexityViolation if the needed ordering is not convex.
Convexified convexify(const BipartiteConvexGraph& g, AddedEdges added);

// Checks the model's intersection graph against E u E_side pair by pair. Returns a
// description of the first difference.
std::optional<std::string> check_convexified(const BipartiteConvexGraph& g, const Convexified& c,
                                             AddedEdges added);

// True when `path` visits every vertex of g once along edges of g (and starts at `start`).
bool is_hamiltonian_path(const BipartiteConvexGraph& g, const BipPath& path,
                         std::optional<BipVertex> start = std::nullopt);

// Notes collect decisions worth reporting, such as the degree-one shortcut.
std::optional<BipPath> hp_biconvex(const BipartiteConvexGraph& g,
                                   std::vector<std::string>* notes = nullptr);
// Hamiltonian path starting at y_start. Throws StartNotInY for start outside 1..|Y|.
std::optional<BipPath> onehp_biconvex(const BipartiteConvexGraph& g, int y_start);

// X-convex variants, limited to the cases that do not need two fixed endpoints.
std::optional<BipPath> hp_xconvex(const BipartiteConvexGraph& g);
std::optional<BipPath> onehp_xconvex(const BipartiteConvexGraph& g, BipVertex start);

// Searches biconvex graphs with |X| = |Y| <= bound, largest size first, for one where
// G' = G + E_Y has a Hamiltonian path and G has none.
std::optional<BipartiteConvexGraph> find_observation51_counterexample(int bound);

// Brute-force answers on the bipartite graph itself.
std::optional<BipPath> oracle_hamiltonian_path(const BipartiteConvexGraph& g,
                                               std::optional<BipVertex> start = std::nullopt);

// Biconvex instance: Y runs with non-decreasing left and right ends, so both orderings
// are convex. density 1 gives the complete bipartite graph.
BipartiteConvexGraph gen_biconvex(int nx, int ny, double density, Rng& rng);

// Every biconvex graph on the given sides with identity orderings (each y takes a run of X
// or no neighbours, kept when N(x) is consecutive in Y). Stops early if `visit` returns false.
void for_each_biconvex_graph(int nx, int ny,
                             const std::function<bool(const BipartiteConvexGraph&)>& visit);

}  // namespace ipc
