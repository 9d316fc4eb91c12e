#include "ipc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace ipc {

SmallGraph SmallGraph::from(const OrderedGraph& g) {
    if (g.n() > 30) throw InstanceTooLarge("graph too large for bitmask oracle");
    SmallGraph s(g.n());
    for (auto [u, v] : g.edges()) s.add_edge(u - 1, v - 1);
    return s;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// best[mask * n + v]: fewest paths covering `mask` where v ends the path built last.
struct CoverTable {
    int n;
    std::vector<int> best;
    std::vector<int> parent;  // previous last vertex, or -1 for the first vertex
    std::vector<char> opened;  // 1 if v started a new path

    int& at(std::uint32_t mask, int v) { return best[static_cast<std::size_t>(mask) * n + v]; }
};

CoverTable solve_table(const SmallGraph& g, std::optional<int> terminal) {
    const int n = g.n;
    const std::size_t states = (std::size_t{1} << n) * static_cast<std::size_t>(n);
    CoverTable t{n, std::vector<int>(states, kInf), std::vector<int>(states, -1),
                 std::vector<char>(states, 0)};
    for (int v = 0; v < n; ++v) {
        t.at(std::uint32_t{1} << v, v) = 1;
        t.opened[(std::size_t{1} << v) * n + v] = 1;
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        for (int v = 0; v < n; ++v) {
            if (!((mask >> v) & 1U)) continue;
            const int cur = t.at(mask, v);
            if (cur >= kInf) continue;
            std::uint32_t rest = full & ~mask;
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                const std::uint32_t next = mask | (std::uint32_t{1} << u);
                const std::size_t idx = static_cast<std::size_t>(next) * n + u;
                // Extending into the terminal would make it internal or a path end reached
                // from inside; paths holding it are always oriented to start there.
                if (g.adjacent(v, u) && u != terminal.value_or(-1) && cur < t.best[idx]) {
                    t.best[idx] = cur;
                    t.parent[idx] = v;
                    t.opened[idx] = 0;
                }
                if (cur + 1 < t.best[idx]) {
                    t.best[idx] = cur + 1;
                    t.parent[idx] = v;
                    t.opened[idx] = 1;
                }
            }
        }
    }
    return t;
}

std::vector<Path> paths_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> nb(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Path> paths;
    for (int s = 0; s < n; ++s) {
        if (used[s] || nb[s].size() > 1) continue;
        Path p;
        int prev = -1, cur = s;
        while (cur != -1) {
            used[cur] = 1;
            p.vertices.push_back(cur + 1);
            int nxt = -1;
            for (int w : nb[cur]) {
                if (w != prev) nxt = w;
            }
            prev = cur;
            cur = nxt;
        }
        paths.push_back(std::move(p));
    }
    return paths;
}

}  // namespace

int oracle_min_size(const SmallGraph& g, std::optional<int> terminal) {
    if (g.n == 0) return 0;
    if (g.n > 24) throw InstanceTooLarge("oracle_min_size supports at most 24 vertices");
    auto t = solve_table(g, terminal);
    const std::uint32_t full = (std::uint32_t{1} << g.n) - 1;
    int best = kInf;
    for (int v = 0; v < g.n; ++v) best = std::min(best, t.at(full, v));
    return best;
}

OracleResult oracle_min_cover(const OrderedGraph& g, std::optional<Vertex> terminal,
                              bool enumerate_all, OracleLimits limits) {
    const int n = g.n();
    if (n > limits.min_size_bound) {
        throw InstanceTooLarge("oracle bound is " + std::to_string(limits.min_size_bound) +
                               " vertices, instance has " + std::to_string(n));
    }
    if (enumerate_all && n > limits.enumerate_bound) {
        throw InstanceTooLarge("enumeration bound is " + std::to_string(limits.enumerate_bound) +
                               " vertices, instance has " + std::to_string(n));
    }
    OracleResult result;
    if (n == 0) {
        result.witness = PathCover({}, terminal, 0);
        if (enumerate_all) result.all_optima = std::vector<PathCover>{result.witness};
        return result;
    }
    const SmallGraph s = SmallGraph::from(g);
    const std::optional<int> t0 = terminal ? std::optional<int>(*terminal - 1) : std::nullopt;
    auto table = solve_table(s, t0);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    int last = 0;
    for (int v = 1; v < n; ++v) {
        if (table.at(full, v) < table.at(full, last)) last = v;
    }
    result.min_size = table.at(full, last);

    // Walk parents back to recover the vertex sequence and its cut points.
    std::vector<Path> reversed_paths;
    std::vector<int> current;
    std::uint32_t mask = full;
    int v = last;
    while (v != -1) {
        const std::size_t idx = static_cast<std::size_t>(mask) * n + v;
        current.push_back(v + 1);
        const int prev = table.parent[idx];
        if (table.opened[idx]) {
            std::reverse(current.begin(), current.end());
            reversed_paths.push_back({current, PathKind::Free});
            current.clear();
        }
        mask &= ~(std::uint32_t{1} << v);
        v = prev;
    }
    result.witness = PathCover(std::move(reversed_paths), terminal, n);
    if (enumerate_all) result.all_optima = enumerate_optimal_covers(g, terminal, result.min_size);
    return result;
}

std::vector<PathCover> enumerate_optimal_covers(const OrderedGraph& g,
                                                std::optional<Vertex> terminal, int min_size) {
    const int n = g.n();
    const auto edges = g.edges();
    const int need = n - min_size;
    std::vector<PathCover> out;
    std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::pair<int, int>> chosen;
    const int t = terminal.value_or(0);

    // Union-find with undo via full copy is fine at these sizes.
    std::function<void(std::size_t, std::vector<int>&)> rec = [&](std::size_t e, std::vector<int>& comp) {
        if (static_cast<int>(chosen.size()) == need) {
            std::vector<std::pair<int, int>> zero_based;
            for (auto [a, b] : chosen) zero_based.emplace_back(a - 1, b - 1);
            out.emplace_back(paths_from_edges(n, zero_based), terminal, n);
            return;
        }
        if (e == edges.size()) return;
        if (static_cast<int>(edges.size() - e) < need - static_cast<int>(chosen.size())) return;
        const auto [u, v] = edges[e];
        const int cap_u = u == t ? 1 : 2;
        const int cap_v = v == t ? 1 : 2;
        if (deg[u] < cap_u && deg[v] < cap_v && comp[u] != comp[v]) {
            std::vector<int> saved = comp;
            const int from = comp[v], to = comp[u];
            for (auto& c : comp) {
                if (c == from) c = to;
            }
            ++deg[u];
            ++deg[v];
            chosen.emplace_back(u, v);
            rec(e + 1, comp);
            chosen.pop_back();
            --deg[u];
            --deg[v];
            comp = std::move(saved);
        }
        rec(e + 1, comp);
    };
    std::vector<int> comp(static_cast<std::size_t>(n) + 1);
    std::iota(comp.begin(), comp.end(), 0);
    if (need >= 0) rec(0, comp);
    return out;
}

std::size_t count_optimal_covers_by_permutation(const OrderedGraph& g,
                                                std::optional<Vertex> terminal) {
    const int n = g.n();
    if (n > 8) throw InstanceTooLarge("permutation counter supports at most 8 vertices");
    if (n == 0) return 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::string> best_covers;
    int best = std::numeric_limits<int>::max();
    do {
        for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
            std::vector<Path> paths(1);
            bool ok = true;
            for (int k = 0; k < n && ok; ++k) {
                if (k > 0) {
                    if ((cuts >> (k - 1)) & 1U) {
                        paths.emplace_back();
                    } else if (!g.adjacent(perm[k - 1], perm[k])) {
                        ok = false;
                    }
                }
                paths.back().vertices.push_back(perm[k]);
            }
            if (!ok) continue;
            const int size = static_cast<int>(paths.size());
            if (size > best) continue;
            if (terminal) {
                bool endpoint = false;
                for (const auto& p : paths) endpoint |= p.front() == *terminal || p.back() == *terminal;
                if (!endpoint) continue;
            }
            if (size < best) {
                best = size;
                best_covers.clear();
            }
            best_covers.insert(PathCover(std::move(paths), terminal, n).str());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_covers.size();
}

std::optional<std::vector<int>> find_hamiltonian_path(const SmallGraph& g, std::optional<int> start) {
    const int n = g.n;
    if (n == 0) return std::vector<int>{};
    if (n > 24) throw InstanceTooLarge("Hamiltonian oracle supports at most 24 vertices");
    const std::size_t states = (std::size_t{1} << n) * static_cast<std::size_t>(n);
    std::vector<int> parent(states, -2);  // -2 unreachable, -1 start
    for (int v = 0; v < n; ++v) {
        if (!start || *start == v) parent[(std::size_t{1} << v) * n + v] = -1;
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        for (int v = 0; v < n; ++v) {
            if (parent[static_cast<std::size_t>(mask) * n + v] == -2) continue;
            std::uint32_t rest = g.adj[v] & ~mask;
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                auto& slot = parent[static_cast<std::size_t>(mask | (std::uint32_t{1} << u)) * n + u];
                if (slot == -2) slot = v;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (parent[static_cast<std::size_t>(full) * n + v] == -2) continue;
        std::vector<int> path;
        std::uint32_t mask = full;
        int cur = v;
        while (cur >= 0) {
            path.push_back(cur);
            const int prev = parent[static_cast<std::size_t>(mask) * n + cur];
            mask &= ~(std::uint32_t{1} << cur);
            cur = prev;
        }
        std::reverse(path.begin(), path.end());
        return path;
    }
    return std::nullopt;
}

}  // namespace ipc
