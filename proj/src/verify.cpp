#include "ipc/verify.hpp"

#include <algorithm>

namespace ipc {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Coverage: return "CoverageViolation";
        case ViolationKind::Disjointness: return "DisjointnessViolation";
        case ViolationKind::Adjacency: return "AdjacencyViolation";
        case ViolationKind::Terminal: return "TerminalViolation";
        case ViolationKind::DConnectivity: return "DConnectivityViolation";
        case ViolationKind::Size: return "SizeViolation";
    }
    return "UnknownViolation";
}

std::vector<Violation> validate_cover(const OrderedGraph& g, const PathCover& cover,
                                      std::optional<Vertex> terminal) {
    std::vector<Violation> out;
    const int n = g.n();
    auto add = [&](ViolationKind kind, std::string msg) { out.push_back({kind, std::move(msg)}); };

    if (cover.graph_n() != n) {
        add(ViolationKind::Size, "cover declares n=" + std::to_string(cover.graph_n()) +
                                     " but graph has " + std::to_string(n) + " vertices");
    }
    if (cover.terminal() != terminal) {
        add(ViolationKind::Terminal, "cover terminal does not match the requested terminal");
    }

    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < cover.paths().size(); ++k) {
        const auto& p = cover.paths()[k];
        const std::string name = "P" + std::to_string(k + 1);
        if (p.vertices.empty()) {
            add(ViolationKind::Size, name + " is empty");
            continue;
        }
        for (std::size_t a = 0; a < p.vertices.size(); ++a) {
            const Vertex v = p.vertices[a];
            if (v < 1 || v > n) {
                add(ViolationKind::Coverage, name + " contains out-of-range vertex " + std::to_string(v));
                continue;
            }
            if (seen[v]++ > 0) {
                add(ViolationKind::Disjointness, "vertex " + std::to_string(v) + " appears more than once");
            }
            if (a + 1 < p.vertices.size()) {
                const Vertex w = p.vertices[a + 1];
                if (w >= 1 && w <= n && !g.adjacent(v, w)) {
                    add(ViolationKind::Adjacency, name + " uses non-edge " + std::to_string(v) + "-" +
                                                      std::to_string(w));
                }
            }
        }
        const bool ends_at_terminal = terminal && (p.front() == *terminal || p.back() == *terminal);
        if (ends_at_terminal != (p.kind == PathKind::Terminal)) {
            add(ViolationKind::Terminal, name + " is marked " +
                                             (p.kind == PathKind::Terminal ? "terminal" : "free") +
                                             " inconsistently with its endpoints");
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        if (seen[v] == 0) add(ViolationKind::Coverage, "vertex " + std::to_string(v) + " is not covered");
    }
    if (terminal) {
        const Vertex t = *terminal;
        bool endpoint = false;
        for (const auto& p : cover.paths()) {
            if (!p.vertices.empty() && (p.front() == t || p.back() == t)) endpoint = true;
        }
        if (!endpoint) {
            add(ViolationKind::Terminal, "terminal " + std::to_string(t) + " is not a path endpoint");
        }
    }
    const long long expected = 2LL * (n - cover.lambda());
    if (const long long d = d_connectivity(cover); d != expected) {
        add(ViolationKind::DConnectivity,
            "d-connectivity " + std::to_string(d) + " != 2(n - lambda) = " + std::to_string(expected));
    }
    return out;
}

std::optional<NestingViolation> check_nesting(const PathCover& cover) {
    const auto& paths = cover.paths();
    const bool has_terminal = cover.terminal().has_value();
    for (std::size_t a = 0; a < paths.size(); ++a) {
        if (has_terminal && paths[a].kind == PathKind::Terminal) continue;
        const Vertex lo = paths[a].left_end();
        const Vertex hi = paths[a].right_end();
        for (std::size_t b = 0; b < paths.size(); ++b) {
            if (a == b || (has_terminal && paths[b].kind == PathKind::Terminal)) continue;
            for (Vertex e : {paths[b].front(), paths[b].back()}) {
                if (lo < e && e < hi) {
                    return NestingViolation{static_cast<int>(a), static_cast<int>(b), e};
                }
            }
        }
    }
    return std::nullopt;
}

long long d_connectivity(const PathCover& cover) {
    long long total = 0;
    for (const auto& p : cover.paths()) {
        if (!p.vertices.empty()) total += 2LL * (static_cast<long long>(p.vertices.size()) - 1);
    }
    return total;
}

std::vector<int> epsilon_profile(const PathCover& cover, EpsilonCount mode) {
    const int n = cover.graph_n();
    // at[v] = contributions that stay counted for every k below v.
    std::vector<int> at(static_cast<std::size_t>(n) + 2, 0);
    for (const auto& p : cover.paths()) {
        if (p.vertices.empty()) continue;
        if (mode == EpsilonCount::DistinctPaths) {
            ++at[p.right_end()];
        } else {
            ++at[p.front()];
            ++at[p.back()];
        }
    }
    std::vector<int> profile(static_cast<std::size_t>(n) + 1, 0);
    int running = 0;
    for (int k = n; k >= 0; --k) {
        profile[k] = running;
        running += at[k];
    }
    return profile;
}

Vertex rightmost_endpoint(const PathCover& cover) {
    Vertex r = 0;
    for (const auto& p : cover.paths()) {
        if (!p.vertices.empty()) r = std::max(r, p.right_end());
    }
    return r;
}

}  // namespace ipc
