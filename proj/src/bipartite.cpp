#include "ipc/bipartite.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "ipc/cover_engine.hpp"
#include "ipc/errors.hpp"

namespace ipc {

namespace {

bool consecutive(const std::vector<int>& sorted) {
    return sorted.empty() || sorted.back() - sorted.front() + 1 == static_cast<int>(sorted.size());
}

const char* side_name(Side s) { return s == Side::X ? "x" : "y"; }

}  // namespace

BipartiteConvexGraph::BipartiteConvexGraph(std::vector<std::string> x_labels,
                                           std::vector<std::string> y_labels,
                                           const std::vector<std::pair<int, int>>& edges,
                                           Convexity convexity)
    : x_labels_(std::move(x_labels)),
      y_labels_(std::move(y_labels)),
      x_nbr_(x_labels_.size()),
      y_nbr_(y_labels_.size()),
      convexity_(convexity) {
    std::vector<std::string> all = x_labels_;
    all.insert(all.end(), y_labels_.begin(), y_labels_.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("vertex labels must be distinct across X and Y");
    }
    for (auto [x, y] : edges) {
        if (x < 1 || x > nx() || y < 1 || y > ny()) {
            throw std::invalid_argument("edge (" + std::to_string(x) + ", " + std::to_string(y) +
                                        ") out of range");
        }
        x_nbr_[x - 1].push_back(y);
        y_nbr_[y - 1].push_back(x);
    }
    for (auto* side : {&x_nbr_, &y_nbr_}) {
        for (auto& nb : *side) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
    }
    check_convexity();
}

BipartiteConvexGraph BipartiteConvexGraph::from_y_runs(int nx,
                                                       const std::vector<std::pair<int, int>>& y_runs,
                                                       Convexity convexity) {
    std::vector<std::string> xs;
    std::vector<std::string> ys;
    for (int x = 1; x <= nx; ++x) xs.push_back("x" + std::to_string(x));
    std::vector<std::pair<int, int>> edges;
    for (int y = 1; y <= static_cast<int>(y_runs.size()); ++y) {
        ys.push_back("y" + std::to_string(y));
        const auto [lo, hi] = y_runs[y - 1];
        if (lo == 0) continue;
        for (int x = lo; x <= hi; ++x) edges.emplace_back(x, y);
    }
    return BipartiteConvexGraph(std::move(xs), std::move(ys), edges, convexity);
}

bool BipartiteConvexGraph::adjacent(int x, int y) const {
    const auto& nb = x_nbr_[x - 1];
    return std::binary_search(nb.begin(), nb.end(), y);
}

std::vector<std::pair<int, int>> BipartiteConvexGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= nx(); ++x) {
        for (int y : x_nbr_[x - 1]) out.emplace_back(x, y);
    }
    return out;
}

bool BipartiteConvexGraph::x_convex() const {
    return std::all_of(y_nbr_.begin(), y_nbr_.end(), consecutive);
}

bool BipartiteConvexGraph::y_convex() const {
    return std::all_of(x_nbr_.begin(), x_nbr_.end(), consecutive);
}

void BipartiteConvexGraph::check_convexity() const {
    auto check = [&](const std::vector<std::vector<int>>& nbrs, Side side) {
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (!consecutive(nbrs[k])) {
                const std::string& lab = side == Side::Y ? y_labels_[k] : x_labels_[k];
                throw ConvexityViolation(side, static_cast<int>(k) + 1,
                                         std::string("neighbourhood of ") + side_name(side) + " vertex " +
                                             lab + " is not consecutive in the " +
                                             (side == Side::Y ? "X" : "Y") + " ordering");
            }
        }
    };
    check(y_nbr_, Side::Y);
    if (convexity_ == Convexity::Biconvex) check(x_nbr_, Side::X);
}

BipartiteConvexGraph BipartiteConvexGraph::parse(std::istream& in) {
    std::string line;
    int line_no = 0;
    int k = -1;
    int m = -1;
    std::optional<Convexity> conv;
    std::optional<std::vector<std::string>> xs;
    std::optional<std::vector<std::string>> ys;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!conv) {
            for (const auto& t : tok) {
                const auto eq = t.find('=');
                if (eq == std::string::npos) throw ParseError(line_no, "expected key=value, got '" + t + "'");
                const std::string key = t.substr(0, eq);
                const std::string val = t.substr(eq + 1);
                try {
                    if (key == "X") {
                        k = std::stoi(val);
                    } else if (key == "Y") {
                        m = std::stoi(val);
                    } else if (key == "convex") {
                        if (val == "x") {
                            conv = Convexity::XConvex;
                        } else if (val == "bi") {
                            conv = Convexity::Biconvex;
                        } else {
                            throw ParseError(line_no, "convex must be x or bi");
                        }
                    } else {
                        throw ParseError(line_no, "unknown header key '" + key + "'");
                    }
                } catch (const std::logic_error&) {
                    throw ParseError(line_no, "bad number in '" + t + "'");
                }
            }
            if (k < 0 || m < 0 || !conv) throw ParseError(line_no, "header needs X=, Y= and convex=");
            continue;
        }
        if (tok[0] == "X:" || tok[0] == "Y:") {
            auto& dest = tok[0] == "X:" ? xs : ys;
            if (dest) throw ParseError(line_no, "ordering line " + tok[0] + " given twice");
            dest = std::vector<std::string>(tok.begin() + 1, tok.end());
            const int want = tok[0] == "X:" ? k : m;
            if (static_cast<int>(dest->size()) != want) {
                throw ParseError(line_no, tok[0] + " lists " + std::to_string(dest->size()) +
                                              " vertices, header says " + std::to_string(want));
            }
            continue;
        }
        if (tok.size() != 2) throw ParseError(line_no, "edge line needs two labels");
        raw_edges.emplace_back(tok[0], tok[1]);
        edge_lines.push_back(line_no);
    }
    if (!conv) throw ParseError(0, "missing header");
    if (!xs) throw ParseError(0, "missing X: ordering line");
    if (!ys) {
        if (*conv == Convexity::Biconvex) throw ParseError(0, "biconvex input needs a Y: ordering line");
        // Y order only matters for biconvexity; take first appearance in the edge list.
        ys.emplace();
        for (const auto& e : raw_edges) {
            if (std::find(ys->begin(), ys->end(), e.second) == ys->end()) ys->push_back(e.second);
        }
        if (static_cast<int>(ys->size()) != m) {
            throw ParseError(0, "without a Y: line every Y vertex must appear in an edge");
        }
    }
    std::map<std::string, int> xpos;
    std::map<std::string, int> ypos;
    for (int i = 0; i < k; ++i) xpos[(*xs)[i]] = i + 1;
    for (int i = 0; i < m; ++i) ypos[(*ys)[i]] = i + 1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < raw_edges.size(); ++e) {
        const auto xi = xpos.find(raw_edges[e].first);
        const auto yi = ypos.find(raw_edges[e].second);
        if (xi == xpos.end()) throw ParseError(edge_lines[e], "'" + raw_edges[e].first + "' is not in X");
        if (yi == ypos.end()) throw ParseError(edge_lines[e], "'" + raw_edges[e].second + "' is not in Y");
        edges.emplace_back(xi->second, yi->second);
    }
    try {
        return BipartiteConvexGraph(std::move(*xs), std::move(*ys), edges, *conv);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

void BipartiteConvexGraph::write(std::ostream& out) const {
    out << "X=" << nx() << " Y=" << ny()
        << " convex=" << (convexity_ == Convexity::Biconvex ? "bi" : "x") << '\n';
    out << "X:";
    for (const auto& l : x_labels_) out << ' ' << l;
    out << "\nY:";
    for (const auto& l : y_labels_) out << ' ' << l;
    out << '\n';
    for (auto [x, y] : edges()) out << x_label(x) << ' ' << y_label(y) << '\n';
}

SmallGraph BipartiteConvexGraph::to_small_graph() const {
    if (nx() + ny() > 30) throw InstanceTooLarge("bipartite graph too large for the bitmask oracle");
    SmallGraph s(nx() + ny());
    for (auto [x, y] : edges()) s.add_edge(x - 1, nx() + y - 1);
    return s;
}

Convexified convexify(const BipartiteConvexGraph& g, AddedEdges added) {
    // The point side is the side whose ordering the other side's neighbourhoods are runs in.
    const Side points = added == AddedEdges::YEdges ? Side::X : Side::Y;
    const Side runs = points == Side::X ? Side::Y : Side::X;
    if (runs == Side::Y && !g.x_convex()) {
        for (int y = 1; y <= g.ny(); ++y) {
            if (!consecutive(g.y_neighbors(y))) {
                throw ConvexityViolation(Side::Y, y, "N(" + g.y_label(y) + ") is not consecutive in X");
            }
        }
    }
    if (runs == Side::X && !g.y_convex()) {
        for (int x = 1; x <= g.nx(); ++x) {
            if (!consecutive(g.x_neighbors(x))) {
                throw ConvexityViolation(Side::X, x, "N(" + g.x_label(x) + ") is not consecutive in Y");
            }
        }
    }
    const int np = points == Side::X ? g.nx() : g.ny();
    const int nr = runs == Side::X ? g.nx() : g.ny();
    std::vector<Interval> iv;
    iv.reserve(static_cast<std::size_t>(np + nr));
    // Record order: all X, then all Y; source_index maps back through it.
    auto emit = [&](Side side, int idx) {
        const BipVertex v{side, idx};
        if (side == points) {
            iv.push_back({g.label(v), Rational(idx), Rational(idx)});
            return;
        }
        const auto& nb = side == Side::X ? g.x_neighbors(idx) : g.y_neighbors(idx);
        if (nb.empty()) {
            // Isolated: a private point to the right of everything.
            iv.push_back({g.label(v), Rational(np + idx), Rational(np + idx)});
        } else {
            iv.push_back({g.label(v), Rational(nb.front()), Rational(nb.back())});
        }
    };
    for (int x = 1; x <= g.nx(); ++x) emit(Side::X, x);
    for (int y = 1; y <= g.ny(); ++y) emit(Side::Y, y);
    (void)nr;

    Convexified out;
    out.model = IntervalModel(std::move(iv));
    out.graph = build_ordering(out.model);
    const int n = out.graph.n();
    out.vertex_at.assign(static_cast<std::size_t>(n) + 1, {});
    out.x_at.assign(static_cast<std::size_t>(g.nx()) + 1, kNoVertex);
    out.y_at.assign(static_cast<std::size_t>(g.ny()) + 1, kNoVertex);
    for (Vertex v = 1; v <= n; ++v) {
        const int rec = out.graph.source_index(v);
        const BipVertex b = rec < g.nx() ? BipVertex{Side::X, rec + 1} : BipVertex{Side::Y, rec - g.nx() + 1};
        out.vertex_at[v] = b;
        (b.side == Side::X ? out.x_at : out.y_at)[b.index] = v;
    }
#ifndef NDEBUG
    if (auto diff = check_convexified(g, out, added)) throw InternalInvariantViolation(*diff);
#endif
    return out;
}

std::optional<std::string> check_convexified(const BipartiteConvexGraph& g, const Convexified& c,
                                             AddedEdges added) {
    auto meet = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) {
                ++i;
            } else {
                ++j;
            }
        }
        return false;
    };
    const int n = g.nx() + g.ny();
    if (c.graph.n() != n) return "G' has " + std::to_string(c.graph.n()) + " vertices, expected " + std::to_string(n);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const BipVertex u = g.from_small_index(a);
            const BipVertex v = g.from_small_index(b);
            bool want = false;
            if (u.side != v.side) {
                const BipVertex x = u.side == Side::X ? u : v;
                const BipVertex y = u.side == Side::X ? v : u;
                want = g.adjacent(x.index, y.index);
            } else if (u.side == Side::Y && added == AddedEdges::YEdges) {
                want = meet(g.y_neighbors(u.index), g.y_neighbors(v.index));
            } else if (u.side == Side::X && added == AddedEdges::XEdges) {
                want = meet(g.x_neighbors(u.index), g.x_neighbors(v.index));
            }
            const bool have = c.graph.adjacent(c.at(u), c.at(v));
            if (want != have) {
                return "pair " + g.label(u) + "-" + g.label(v) + (have ? " joined in G' but not in E u E_side"
                                                                        : " missing from G'");
            }
        }
    }
    return std::nullopt;
}

bool is_hamiltonian_path(const BipartiteConvexGraph& g, const BipPath& path,
                         std::optional<BipVertex> start) {
    const int n = g.nx() + g.ny();
    if (static_cast<int>(path.size()) != n) return false;
    if (start && (path.empty() || path.front() != *start)) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < path.size(); ++k) {
        const BipVertex v = path[k];
        const int limit = v.side == Side::X ? g.nx() : g.ny();
        if (v.index < 1 || v.index > limit) return false;
        const int s = g.small_index(v);
        if (seen[s]) return false;
        seen[s] = 1;
        if (k == 0) continue;
        const BipVertex u = path[k - 1];
        if (u.side == v.side) return false;
        const BipVertex x = u.side == Side::X ? u : v;
        const BipVertex y = u.side == Side::X ? v : u;
        if (!g.adjacent(x.index, y.index)) return false;
    }
    return true;
}

namespace {

// 1PC of G' (optionally with a terminal); a single path is translated back and gated.
std::optional<BipPath> single_path(const BipartiteConvexGraph& g, const Convexified& c,
                                   std::optional<BipVertex> terminal) {
    std::optional<Vertex> t;
    if (terminal) t = c.at(*terminal);
    const PathCover cover = solve_1pc(c.graph, t);
    if (cover.lambda() != 1) return std::nullopt;
    BipPath path;
    for (Vertex v : cover.paths().front().vertices) path.push_back(c.vertex_at[v]);
    if (!is_hamiltonian_path(g, path, terminal)) {
        throw InternalInvariantViolation("path from G' uses an edge outside the bipartite graph");
    }
    return path;
}

std::optional<BipPath> trivial_case(const BipartiteConvexGraph& g) {
    if (g.nx() + g.ny() == 0) return BipPath{};
    if (g.nx() + g.ny() == 1) return BipPath{g.nx() == 1 ? BipVertex{Side::X, 1} : BipVertex{Side::Y, 1}};
    return std::nullopt;
}

void note(std::vector<std::string>* notes, std::string text) {
    if (notes != nullptr) notes->push_back(std::move(text));
}

}  // namespace

std::optional<BipPath> hp_biconvex(const BipartiteConvexGraph& g, std::vector<std::string>* notes) {
    if (g.convexity() != Convexity::Biconvex && !g.y_convex()) {
        throw ConvexityViolation(Side::X, 0, "hp_biconvex needs a biconvex graph");
    }
    if (auto t = trivial_case(g)) return t;
    const int gap = g.nx() - g.ny();
    if (gap > 1 || gap < -1) {
        note(notes, "sizes differ by more than one");
        return std::nullopt;
    }
    if (gap == 1) return single_path(g, convexify(g, AddedEdges::YEdges), std::nullopt);
    if (gap == -1) return single_path(g, convexify(g, AddedEdges::XEdges), std::nullopt);

    const Convexified c = convexify(g, AddedEdges::YEdges);
    std::vector<int> leaves;
    for (int y = 1; y <= g.ny(); ++y) {
        if (g.y_neighbors(y).size() == 1) leaves.push_back(y);
    }
    if (leaves.size() > 2) {
        note(notes, "more than two degree-one Y vertices; no Hamiltonian path");
        return std::nullopt;
    }
    if (!leaves.empty()) {
        note(notes, "degree-one shortcut through " + g.y_label(leaves.front()));
        return single_path(g, c, BipVertex{Side::Y, leaves.front()});
    }
    for (int y = 1; y <= g.ny(); ++y) {
        if (auto p = single_path(g, c, BipVertex{Side::Y, y})) return p;
    }
    return std::nullopt;
}

std::optional<BipPath> onehp_biconvex(const BipartiteConvexGraph& g, int y_start) {
    if (y_start < 1 || y_start > g.ny()) {
        throw StartNotInY("start y" + std::to_string(y_start) + " is not a Y vertex");
    }
    if (g.convexity() != Convexity::Biconvex && !g.y_convex()) {
        throw ConvexityViolation(Side::X, 0, "onehp_biconvex needs a biconvex graph");
    }
    const BipVertex start{Side::Y, y_start};
    if (g.nx() + g.ny() == 1) return BipPath{start};
    const int gap = g.nx() - g.ny();
    if (gap > 1 || gap < -1) return std::nullopt;
    if (gap == 1) return std::nullopt;  // both ends of such a path lie in X
    if (gap == 0) return single_path(g, convexify(g, AddedEdges::YEdges), start);
    return single_path(g, convexify(g, AddedEdges::XEdges), start);
}

std::optional<BipPath> hp_xconvex(const BipartiteConvexGraph& g) {
    if (auto t = trivial_case(g)) return t;
    const int gap = g.nx() - g.ny();
    if (gap > 1 || gap < -1) return std::nullopt;
    if (gap == -1) {
        throw UnsupportedCase("|Y| - |X| = 1 on an X-convex graph needs two fixed endpoints");
    }
    const Convexified c = convexify(g, AddedEdges::YEdges);
    if (gap == 1) return single_path(g, c, std::nullopt);
    for (int y = 1; y <= g.ny(); ++y) {
        if (auto p = single_path(g, c, BipVertex{Side::Y, y})) return p;
    }
    return std::nullopt;
}

std::optional<BipPath> onehp_xconvex(const BipartiteConvexGraph& g, BipVertex start) {
    const int limit = start.side == Side::X ? g.nx() : g.ny();
    if (start.index < 1 || start.index > limit) throw std::invalid_argument("start vertex out of range");
    if (g.nx() + g.ny() == 1) return BipPath{start};
    const int gap = g.nx() - g.ny();
    if (gap > 1 || gap < -1) return std::nullopt;
    if (gap == 1) {
        if (start.side == Side::Y) return std::nullopt;
        return single_path(g, convexify(g, AddedEdges::YEdges), start);
    }
    if (gap == 0) {
        if (start.side == Side::X) {
            throw UnsupportedCase("|X| = |Y| with the start in X needs two fixed endpoints");
        }
        return single_path(g, convexify(g, AddedEdges::YEdges), start);
    }
    if (start.side == Side::X) return std::nullopt;
    throw UnsupportedCase("|Y| - |X| = 1 with the start in Y needs two fixed endpoints");
}

std::optional<BipPath> oracle_hamiltonian_path(const BipartiteConvexGraph& g,
                                               std::optional<BipVertex> start) {
    std::optional<int> s;
    if (start) s = g.small_index(*start);
    auto p = find_hamiltonian_path(g.to_small_graph(), s);
    if (!p) return std::nullopt;
    BipPath out;
    for (int k : *p) out.push_back(g.from_small_index(k));
    return out;
}

void for_each_biconvex_graph(int nx, int ny,
                             const std::function<bool(const BipartiteConvexGraph&)>& visit) {
    std::vector<std::pair<int, int>> choices{{0, 0}};
    for (int lo = 1; lo <= nx; ++lo) {
        for (int hi = lo; hi <= nx; ++hi) choices.emplace_back(lo, hi);
    }
    std::vector<int> pick(static_cast<std::size_t>(ny), 0);
    std::vector<std::pair<int, int>> runs(static_cast<std::size_t>(ny));
    for (;;) {
        for (int y = 0; y < ny; ++y) runs[y] = choices[pick[y]];
        bool ok = true;
        for (int x = 1; x <= nx && ok; ++x) {
            int first = 0;
            int last = 0;
            int count = 0;
            for (int y = 1; y <= ny; ++y) {
                if (runs[y - 1].first != 0 && runs[y - 1].first <= x && x <= runs[y - 1].second) {
                    if (first == 0) first = y;
                    last = y;
                    ++count;
                }
            }
            ok = count == 0 || last - first + 1 == count;
        }
        if (ok && !visit(BipartiteConvexGraph::from_y_runs(nx, runs, Convexity::Biconvex))) return;
        int y = 0;
        while (y < ny && ++pick[y] == static_cast<int>(choices.size())) pick[y++] = 0;
        if (y == ny) return;
    }
}

std::optional<BipartiteConvexGraph> find_observation51_counterexample(int bound) {
    std::optional<BipartiteConvexGraph> found;
    for (int k = bound; k >= 1 && !found; --k) {
        for_each_biconvex_graph(k, k, [&](const BipartiteConvexGraph& g) {
            for (int y = 1; y <= k; ++y) {
                if (g.y_neighbors(y).empty()) return true;
            }
            const Convexified c = convexify(g, AddedEdges::YEdges);
            if (!find_hamiltonian_path(SmallGraph::from(c.graph))) return true;
            if (oracle_hamiltonian_path(g)) return true;
            found = g;
            return false;
        });
    }
    return found;
}

BipartiteConvexGraph gen_biconvex(int nx, int ny, double density, Rng& rng) {
    if (nx < 1) throw std::invalid_argument("gen_biconvex needs at least one X vertex");
    std::vector<int> lo(static_cast<std::size_t>(ny));
    std::vector<int> hi(static_cast<std::size_t>(ny));
    const auto span = static_cast<int>(density * (nx - 1) + 0.5);
    for (int y = 0; y < ny; ++y) {
        lo[y] = static_cast<int>(rng.uniform(1, nx));
        hi[y] = static_cast<int>(std::min<std::int64_t>(nx, lo[y] + rng.uniform(0, span)));
    }
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    std::vector<std::pair<int, int>> runs;
    for (int y = 0; y < ny; ++y) {
        if (density >= 1.0) {
            runs.emplace_back(1, nx);
        } else {
            runs.emplace_back(lo[y], std::max(lo[y], hi[y]));
        }
    }
    return BipartiteConvexGraph::from_y_runs(nx, runs, Convexity::Biconvex);
}

}  // namespace ipc
