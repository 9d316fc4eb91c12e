#include "ipc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ipc {

void GenSpec::check() const {
    if (n < 0 || m < 0) throw std::invalid_argument("sizes must be non-negative");
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must be in [0, 1]");
    if (count < 0) throw std::invalid_argument("count must be non-negative");
}

IntervalModel gen_interval(int n, double density, Rng& rng) {
    std::vector<std::int64_t> centres(static_cast<std::size_t>(n));
    std::iota(centres.begin(), centres.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(centres[i], centres[rng.uniform(0, i)]);
    std::vector<Interval> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        // Centres are 2 apart; radii of at least n at density 1 make every pair meet.
        const std::int64_t c = 2 * centres[i];
        const auto r = static_cast<std::int64_t>(density * n * (1.0 + rng.unit()));
        out.push_back({"v" + std::to_string(i + 1), Rational(c - r), Rational(c + r)});
    }
    return IntervalModel(std::move(out));
}

OrderedGraph gen_test_graph(int n, Rng& rng) {
    if (rng.chance(0.5)) {
        const double density = rng.unit() * rng.unit();
        return build_ordering(gen_interval(n, density, rng));
    }
    std::vector<int> reach(static_cast<std::size_t>(n) + 1, 1);
    const auto w = rng.uniform(0, std::max(1, n));
    for (int k = 1; k <= n; ++k) reach[k] = static_cast<int>(std::max<std::int64_t>(1, k - rng.uniform(0, w)));
    return graph_from_lower_reach(reach);
}

OrderedGraph graph_from_lower_reach(std::span<const int> lower_reach) {
    const int n = static_cast<int>(lower_reach.size()) - 1;
    std::vector<Edge> edges;
    for (int k = 2; k <= n; ++k) {
        for (int i = lower_reach[k]; i < k; ++i) edges.emplace_back(i, k);
    }
    return OrderedGraph::from_edges(n, edges);
}

void for_each_ordered_interval_graph(int n, const std::function<bool(const OrderedGraph&)>& visit) {
    std::vector<int> reach(static_cast<std::size_t>(n) + 1, 1);
    if (n <= 1) {
        if (n == 1) reach[1] = 1;
        visit(graph_from_lower_reach(reach));
        return;
    }
    for (int k = 1; k <= n; ++k) reach[k] = 1;
    while (true) {
        if (!visit(graph_from_lower_reach(reach))) return;
        int k = n;
        while (k >= 2 && reach[k] == k) {
            reach[k] = 1;
            --k;
        }
        if (k < 2) return;
        ++reach[k];
    }
}

}  // namespace ipc
