#pragma once

#include <algorithm>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipc/ordered_graph.hpp"

namespace ipc {

enum class PathKind { Free, Terminal };

struct Path {
    std::vector<Vertex> vertices;
    PathKind kind = PathKind::Free;

    [[nodiscard]] Vertex front() const { return vertices.front(); }
    [[nodiscard]] Vertex back() const { return vertices.back(); }
    [[nodiscard]] Vertex left_end() const { return std::min(front(), back()); }
    [[nodiscard]] Vertex right_end() const { return std::max(front(), back()); }
    [[nodiscard]] bool trivial() const { return vertices.size() == 1; }

    friend bool operator==(const Path&, const Path&) = default;
};

// Vertex-disjoint paths covering a graph, with at most one terminal vertex that must be a
// path endpoint. Paths are stored in canonical form: the terminal path starts at the
// terminal, free paths start at their smaller endpoint, and paths are sorted by their
// smaller endpoint.
class PathCover {
public:
    PathCover() = default;
    PathCover(std::vector<Path> paths, std::optional<Vertex> terminal, int n);

    [[nodiscard]] const std::vector<Path>& paths() const { return paths_; }
    [[nodiscard]] int lambda() const { return static_cast<int>(paths_.size()); }
    [[nodiscard]] std::optional<Vertex> terminal() const { return terminal_; }
    [[nodiscard]] int graph_n() const { return n_; }

    // `lambda=<k> terminal=<t|none> n=<n>` then `P<k> <T|F>: i1 ... im` per path.
    void write(std::ostream& out) const;
    [[nodiscard]] std::string str() const;
    // Throws ParseError. Does not check the cover against any graph.
    static PathCover parse(std::istream& in);

    friend bool operator==(const PathCover&, const PathCover&) = default;

private:
    std::vector<Path> paths_;
    std::optional<Vertex> terminal_;
    int n_ = 0;
};

}  // namespace ipc
