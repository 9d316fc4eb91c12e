#include "ipc/cover_engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "ipc/errors.hpp"
#include "ipc/verify.hpp"

namespace ipc {

CoverState::CoverState(const OrderedGraph& g, std::optional<Vertex> terminal)
    : g_(&g),
      terminal_(terminal),
      link_(static_cast<std::size_t>(g.n()) + 1, {kNoVertex, kNoVertex}),
      placed_(static_cast<std::size_t>(g.n()) + 1, 0) {
    if (terminal_ && (*terminal_ < 1 || *terminal_ > g.n())) {
        throw std::out_of_range("terminal " + std::to_string(*terminal_) + " not in 1.." +
                                std::to_string(g.n()));
    }
}

void CoverState::require(bool ok, const std::string& what) const {
    if (!ok) throw InternalInvariantViolation(what);
}

int CoverState::path_of_end(Vertex e) const {
    for (int p = 0; p < lambda(); ++p) {
        if (ends_[p].a == e || ends_[p].b == e) return p;
    }
    return -1;
}

std::vector<Vertex> CoverState::free_ends(int p) const {
    const Ends& r = ends_[p];
    if (r.trivial()) return {r.a};
    std::vector<Vertex> out;
    if (!terminal_ || r.a != *terminal_) out.push_back(r.a);
    if (!terminal_ || r.b != *terminal_) out.push_back(r.b);
    return out;
}

void CoverState::require_free_end(Vertex e, const char* op) const {
    const int p = e >= 1 && e <= g_->n() ? path_of_end(e) : -1;
    require(p >= 0, std::string(op) + ": " + std::to_string(e) + " is not a path endpoint");
    require(!terminal_ || e != *terminal_ || ends_[p].trivial(),
            std::string(op) + ": terminal " + std::to_string(e) + " cannot take another edge");
}

void CoverState::place(Vertex v) {
    require(v >= 1 && v <= g_->n(), "vertex " + std::to_string(v) + " out of range");
    require(!placed_[v], "vertex " + std::to_string(v) + " already placed");
    placed_[v] = 1;
}

void CoverState::link(Vertex u, Vertex v) {
    require(g_->adjacent(u, v),
            "no edge " + std::to_string(u) + "-" + std::to_string(v) + " in the graph");
    auto slot = [&](Vertex x, Vertex y) {
        auto& l = link_[x];
        if (l[0] == kNoVertex) {
            l[0] = y;
        } else {
            require(l[1] == kNoVertex, "vertex " + std::to_string(x) + " already has two path edges");
            l[1] = y;
        }
    };
    slot(u, v);
    slot(v, u);
}

void CoverState::unlink(Vertex u, Vertex v) {
    auto drop = [&](Vertex x, Vertex y) {
        auto& l = link_[x];
        if (l[0] == y) {
            l[0] = l[1];
            l[1] = kNoVertex;
        } else {
            require(l[1] == y,
                    "no path edge " + std::to_string(x) + "-" + std::to_string(y) + " to remove");
            l[1] = kNoVertex;
        }
    };
    drop(u, v);
    drop(v, u);
}

Vertex CoverState::walk_to_end(Vertex from, Vertex prev) const {
    Vertex cur = from;
    for (int guard = 0; guard <= g_->n(); ++guard) {
        const auto& l = link_[cur];
        const Vertex next = l[0] != prev ? l[0] : l[1];
        if (next == kNoVertex) return cur;
        prev = cur;
        cur = next;
    }
    throw InternalInvariantViolation("path walk from " + std::to_string(from) + " does not end");
}

void CoverState::set_ends(int p, Vertex x, Vertex y) {
    if (terminal_ && y == *terminal_) std::swap(x, y);
    ends_[p] = {x, y};
    if (terminal_ && x == *terminal_) tpath_ = p;
}

void CoverState::remove_path(int p) {
    const int last = lambda() - 1;
    if (p != last) ends_[p] = ends_[last];
    ends_.pop_back();
    if (tpath_ == last) tpath_ = p;
}

void CoverState::connect(Vertex e, Vertex v) {
    require_free_end(e, "connect");
    const int p = path_of_end(e);
    place(v);
    link(e, v);
    set_ends(p, ends_[p].other(e), v);
}

void CoverState::insert(Vertex a, Vertex b, Vertex v) {
    require(a >= 1 && a <= g_->n() && (link_[a][0] == b || link_[a][1] == b) && b != kNoVertex,
            "insert: " + std::to_string(a) + "-" + std::to_string(b) + " is not a path edge");
    require(!terminal_ || v != *terminal_, "insert: the terminal cannot become internal");
    place(v);
    unlink(a, b);
    link(a, v);
    link(v, b);
}

void CoverState::bridge(Vertex e1, Vertex v, Vertex e2) {
    require_free_end(e1, "bridge");
    require_free_end(e2, "bridge");
    const int p1 = path_of_end(e1);
    const int p2 = path_of_end(e2);
    require(p1 != p2, "bridge: " + std::to_string(e1) + " and " + std::to_string(e2) +
                          " end the same path");
    require(!terminal_ || v != *terminal_, "bridge: the terminal cannot become internal");
    place(v);
    link(e1, v);
    link(v, e2);
    const Vertex o1 = ends_[p1].other(e1);
    const Vertex o2 = ends_[p2].other(e2);
    if (tpath_ == p2) tpath_ = p1;
    set_ends(p1, o1, o2);
    remove_path(p2);
}

void CoverState::new_path(Vertex v) {
    place(v);
    ends_.push_back({v, v});
    if (terminal_ && v == *terminal_) tpath_ = lambda() - 1;
}

void CoverState::new_path(Vertex v, Vertex vj, Vertex cut) {
    require(vj >= 1 && vj <= g_->n() && cut != kNoVertex &&
                (link_[vj][0] == cut || link_[vj][1] == cut),
            "new_path: " + std::to_string(vj) + "-" + std::to_string(cut) + " is not a path edge");
    const Vertex x = walk_to_end(vj, cut);
    const Vertex y = walk_to_end(cut, vj);
    const int p = path_of_end(x);
    require(p >= 0 && ends_[p].other(x) == y, "new_path: endpoint records out of date");
    require(!terminal_ || vj != *terminal_, "new_path: the terminal cannot become internal");
    place(v);
    unlink(vj, cut);
    link(vj, v);
    if (tpath_ == p) tpath_ = -1;
    ends_.push_back({});
    set_ends(lambda() - 1, cut, y);
    set_ends(p, x, v);
}

void CoverState::connect_break(Vertex v, Vertex vj, Vertex cut, Vertex va) {
    require(!terminal_ || v != *terminal_, "connect_break: the terminal cannot become internal");
    require_free_end(va, "connect_break");
    new_path(v, vj, cut);
    const int p1 = path_of_end(v);
    const int p2 = path_of_end(va);
    require(p1 != p2, "connect_break: " + std::to_string(va) + " ends the split path");
    link(v, va);
    const Vertex o1 = ends_[p1].other(v);
    const Vertex o2 = ends_[p2].other(va);
    if (tpath_ == p2) tpath_ = p1;
    set_ends(p1, o1, o2);
    remove_path(p2);
}

void CoverState::check_invariants(Vertex upto) const {
    const int n = g_->n();
    for (Vertex v = 1; v <= n; ++v) {
        require(static_cast<bool>(placed_[v]) == (v <= upto),
                "vertex " + std::to_string(v) + (v <= upto ? " not placed" : " placed early"));
        for (Vertex w : link_[v]) {
            if (w == kNoVertex) continue;
            require(g_->adjacent(v, w), "path edge " + std::to_string(v) + "-" + std::to_string(w) +
                                            " missing from the graph");
            require(link_[w][0] == v || link_[w][1] == v,
                    "path edge " + std::to_string(v) + "-" + std::to_string(w) + " not symmetric");
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int covered = 0;
    for (int p = 0; p < lambda(); ++p) {
        const Ends& r = ends_[p];
        Vertex prev = kNoVertex;
        Vertex cur = r.a;
        for (;;) {
            require(cur >= 1 && cur <= n && !seen[cur],
                    "path " + std::to_string(p) + " revisits or leaves the graph at " +
                        std::to_string(cur));
            seen[cur] = 1;
            ++covered;
            const auto& l = link_[cur];
            const Vertex next = l[0] != prev ? l[0] : l[1];
            if (next == kNoVertex) break;
            prev = cur;
            cur = next;
        }
        require(cur == r.b, "path " + std::to_string(p) + " record says end " +
                                std::to_string(r.b) + " but walk ends at " + std::to_string(cur));
    }
    require(covered == upto, "paths cover " + std::to_string(covered) + " of " +
                                 std::to_string(upto) + " placed vertices");
    if (terminal_ && *terminal_ <= upto) {
        require(tpath_ >= 0 && tpath_ < lambda() && ends_[tpath_].a == *terminal_,
                "terminal " + std::to_string(*terminal_) + " is not recorded as a path endpoint");
    } else {
        require(tpath_ == -1, "terminal path recorded before the terminal was placed");
    }
}

PathCover CoverState::to_cover() const {
    std::vector<Path> paths;
    paths.reserve(ends_.size());
    for (const Ends& r : ends_) {
        Path path;
        Vertex prev = kNoVertex;
        Vertex cur = r.a;
        for (;;) {
            path.vertices.push_back(cur);
            const auto& l = link_[cur];
            const Vertex next = l[0] != prev ? l[0] : l[1];
            if (next == kNoVertex) break;
            prev = cur;
            cur = next;
        }
        paths.push_back(std::move(path));
    }
    return PathCover(std::move(paths), terminal_, g_->n());
}

namespace {

struct Move {
    enum Kind { Connect, Bridge, Insert, NewPath } kind;
    Vertex a = kNoVertex;
    Vertex b = kNoVertex;
    const char* label = "";
};

struct Slot {
    Vertex end;
    int path;
};

// Free endpoints that the vertex with leftmost neighbour j can reach, left to right.
std::vector<Slot> visible_slots(const CoverState& s, Vertex j) {
    std::vector<Slot> out;
    for (int p = 0; p < s.lambda(); ++p) {
        for (Vertex e : s.free_ends(p)) {
            if (e >= j) out.push_back({e, p});
        }
    }
    std::sort(out.begin(), out.end(), [](const Slot& x, const Slot& y) { return x.end < y.end; });
    return out;
}

// Path edge with both ends in [j, i-1] whose larger end is largest.
std::optional<std::pair<Vertex, Vertex>> insertion_edge(const CoverState& s, Vertex i, Vertex j) {
    for (Vertex v = i - 1; v >= j; --v) {
        const auto& l = s.links(v);
        Vertex w = kNoVertex;
        for (Vertex x : l) {
            if (x != kNoVertex && x >= j && x < i) w = std::max(w, x);
        }
        if (w != kNoVertex) return std::make_pair(v, w);
    }
    return std::nullopt;
}

Move greedy_move(const CoverState& s, Vertex i, Vertex j, const std::vector<Slot>& slots,
                 bool ignored_terminal) {
    if (!slots.empty()) {
        const Slot first = slots.front();
        for (const Slot& x : slots) {
            if (x.path != first.path) {
                return {Move::Bridge, first.end, x.end,
                        ignored_terminal ? "bridge: leftmost free endpoints, terminal path skipped"
                                         : "bridge: leftmost free endpoints"};
            }
        }
        return {Move::Connect, first.end, kNoVertex,
                ignored_terminal ? "connect: leftmost free endpoint, terminal path skipped"
                                 : "connect: leftmost free endpoint"};
    }
    if (auto edge = insertion_edge(s, i, j)) {
        return {Move::Insert, edge->first, edge->second, "insert: highest path edge in reach"};
    }
    return {Move::NewPath, kNoVertex, kNoVertex, "new_path: trivial"};
}

void apply(CoverState& s, const Move& m, Vertex i) {
    switch (m.kind) {
        case Move::Connect: s.connect(m.a, i); break;
        case Move::Bridge: s.bridge(m.a, i, m.b); break;
        case Move::Insert: s.insert(m.a, m.b, i); break;
        case Move::NewPath: s.new_path(i); break;
    }
}

TraceEvent event_for(const Move& m, Vertex i) {
    static const char* const names[] = {"connect", "bridge", "insert", "new_path"};
    TraceEvent ev{i, names[m.kind], m.label, {}};
    if (m.a != kNoVertex) ev.touched.push_back(m.a);
    ev.touched.push_back(i);
    if (m.b != kNoVertex) ev.touched.push_back(m.b);
    return ev;
}

// What a branch is worth for the rest of the sweep: its size, the free end of the terminal
// path, and the free endpoints of the other paths (descending, trivial paths twice).
struct Profile {
    int lambda = 0;
    Vertex ts = kNoVertex;
    std::vector<Vertex> ends;
};

Profile profile_after(const CoverState& s, const Move& m, Vertex i) {
    std::vector<CoverState::Ends> rec = s.ends();
    int tp = s.terminal_path();
    const std::optional<Vertex> t = s.terminal();
    auto owner = [&](Vertex e) {
        for (int p = 0; p < static_cast<int>(rec.size()); ++p) {
            if (rec[p].a == e || rec[p].b == e) return p;
        }
        return -1;
    };
    switch (m.kind) {
        case Move::NewPath:
            rec.push_back({i, i});
            if (t && i == *t) tp = static_cast<int>(rec.size()) - 1;
            break;
        case Move::Connect: {
            const int p = owner(m.a);
            rec[p] = {rec[p].other(m.a), i};
            if (t && i == *t) tp = p;
            break;
        }
        case Move::Bridge: {
            const int p1 = owner(m.a);
            const int p2 = owner(m.b);
            rec[p1] = {rec[p1].other(m.a), rec[p2].other(m.b)};
            if (tp == p2) tp = p1;
            const int last = static_cast<int>(rec.size()) - 1;
            rec[p2] = rec[last];
            rec.pop_back();
            if (tp == last) tp = p2;
            break;
        }
        case Move::Insert: break;
    }
    Profile pr;
    pr.lambda = static_cast<int>(rec.size());
    pr.ends.reserve(rec.size() * 2);
    for (int p = 0; p < static_cast<int>(rec.size()); ++p) {
        if (p == tp) {
            pr.ts = rec[p].a == *t ? rec[p].b : rec[p].a;
            continue;
        }
        pr.ends.push_back(rec[p].a);
        pr.ends.push_back(rec[p].b);
    }
    std::sort(pr.ends.begin(), pr.ends.end(), std::greater<>());
    return pr;
}

bool dominates(const Profile& x, const Profile& y) {
    if (x.lambda > y.lambda || x.ts < y.ts || x.ends.size() < y.ends.size()) return false;
    for (std::size_t k = 0; k < y.ends.size(); ++k) {
        if (x.ends[k] < y.ends[k]) return false;
    }
    return true;
}

// Sort order under which a dominating profile never comes after one it dominates.
bool ranks_before(const Profile& x, const Profile& y) {
    if (x.lambda != y.lambda) return x.lambda < y.lambda;
    if (x.ts != y.ts) return x.ts > y.ts;
    if (x.ends.size() != y.ends.size()) return x.ends.size() > y.ends.size();
    return x.ends > y.ends;
}

struct TraceNode {
    TraceEvent event;
    std::shared_ptr<const TraceNode> parent;
};

struct Branch {
    CoverState state;
    std::shared_ptr<const TraceNode> trace;
};

struct Candidate {
    int parent;
    Move move;
    Profile profile;
};

std::vector<TraceEvent> unwind(const std::shared_ptr<const TraceNode>& node) {
    std::vector<TraceEvent> out;
    for (const TraceNode* p = node.get(); p != nullptr; p = p->parent.get()) out.push_back(p->event);
    std::reverse(out.begin(), out.end());
    return out;
}

void candidate_moves(const CoverState& s, Vertex i, Vertex j, Vertex t, std::vector<Move>& out) {
    const auto slots = visible_slots(s, j);
    if (i == t) {
        out.push_back({Move::NewPath, kNoVertex, kNoVertex, "terminal: new trivial path"});
        for (const Slot& x : slots) {
            out.push_back({Move::Connect, x.end, kNoVertex, "terminal: connect to a free endpoint"});
        }
        return;
    }
    const int tp = s.terminal_path();
    std::vector<Slot> free_slots;
    Vertex tslot = kNoVertex;
    for (const Slot& x : slots) {
        if (x.path == tp) {
            tslot = x.end;
        } else {
            free_slots.push_back(x);
        }
    }
    out.push_back(greedy_move(s, i, j, slots, false));
    out.push_back(greedy_move(s, i, j, free_slots, true));
    if (!free_slots.empty()) {
        out.push_back({Move::Connect, free_slots.front().end, kNoVertex,
                       "connect: leftmost endpoint of a free path"});
    }
    if (tslot == kNoVertex) return;
    out.push_back({Move::Connect, tslot, kNoVertex, "connect: terminal path"});
    for (const Slot& x : free_slots) {
        out.push_back({Move::Bridge, tslot, x.end, "bridge: terminal path with a free path"});
    }
}

SolveResult solve_free(const OrderedGraph& g, const SolveOptions& options) {
    const int n = g.n();
    SolveResult result;
    result.prefix_lambda.assign(static_cast<std::size_t>(n) + 1, 0);
    result.max_branches = n > 0 ? 1 : 0;
    CoverState s(g, std::nullopt);
    for (Vertex i = 1; i <= n; ++i) {
        const Vertex j = g.leftmost_neighbor(i).value_or(i);
        const Move m = greedy_move(s, i, j, visible_slots(s, j), false);
        apply(s, m, i);
        if (options.trace) result.trace.push_back(event_for(m, i));
        if (options.check_invariants) s.check_invariants(i);
        result.prefix_lambda[i] = s.lambda();
    }
    result.cover = s.to_cover();
    return result;
}

}  // namespace

SolveResult solve_1pc_detailed(const OrderedGraph& g, std::optional<Vertex> terminal,
                               const SolveOptions& options) {
    if (!terminal) return solve_free(g, options);
    const int n = g.n();
    const Vertex t = *terminal;
    SolveResult result;
    result.prefix_lambda.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<Branch> branches;
    branches.push_back({CoverState(g, terminal), nullptr});
    std::vector<Move> moves;
    std::vector<Candidate> cands;
    std::vector<int> order;
    std::vector<int> kept;
    for (Vertex i = 1; i <= n; ++i) {
        const Vertex j = g.leftmost_neighbor(i).value_or(i);
        cands.clear();
        for (int b = 0; b < static_cast<int>(branches.size()); ++b) {
            moves.clear();
            candidate_moves(branches[b].state, i, j, t, moves);
            for (const Move& m : moves) {
                cands.push_back({b, m, profile_after(branches[b].state, m, i)});
            }
        }

        order.resize(cands.size());
        for (std::size_t k = 0; k < cands.size(); ++k) order[k] = static_cast<int>(k);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return ranks_before(cands[x].profile, cands[y].profile);
        });
        kept.clear();
        for (int c : order) {
            bool beaten = false;
            for (int k : kept) {
                if (dominates(cands[k].profile, cands[c].profile)) {
                    beaten = true;
                    break;
                }
            }
            if (!beaten) kept.push_back(c);
        }
        const int best = cands[kept.front()].profile.lambda;
        std::erase_if(kept, [&](int c) { return cands[c].profile.lambda > best + 1; });

        // Materialise survivors; the last survivor of each parent takes the parent's state.
        std::vector<int> last_child(branches.size(), -1);
        for (std::size_t k = 0; k < kept.size(); ++k) last_child[cands[kept[k]].parent] = static_cast<int>(k);
        std::vector<Branch> next;
        next.reserve(kept.size());
        for (std::size_t k = 0; k < kept.size(); ++k) {
            const Candidate& c = cands[kept[k]];
            Branch& from = branches[c.parent];
            if (last_child[c.parent] == static_cast<int>(k)) {
                next.push_back(std::move(from));
            } else {
                next.push_back(from);
            }
            Branch& nb = next.back();
            apply(nb.state, c.move, i);
            if (options.trace) {
                nb.trace = std::make_shared<const TraceNode>(TraceNode{event_for(c.move, i), nb.trace});
            }
            if (options.check_invariants) nb.state.check_invariants(i);
        }
        branches = std::move(next);
        result.prefix_lambda[i] = best;
        result.max_branches = std::max(result.max_branches, branches.size());
    }

    // Among the smallest covers prefer one without nested free paths, then the one whose
    // endpoints sit furthest right.
    int chosen = -1;
    bool chosen_nested = true;
    std::vector<int> chosen_profile;
    for (int b = 0; b < static_cast<int>(branches.size()); ++b) {
        if (branches[b].state.lambda() != result.prefix_lambda[n] && n > 0) continue;
        PathCover cover = branches[b].state.to_cover();
        const bool nested = check_nesting(cover).has_value();
        auto prof = epsilon_profile(cover, EpsilonCount::Endpoints);
        std::reverse(prof.begin(), prof.end());
        const bool better = chosen < 0 || (chosen_nested && !nested) ||
                            (chosen_nested == nested && prof > chosen_profile);
        if (better) {
            chosen = b;
            chosen_nested = nested;
            chosen_profile = std::move(prof);
            result.cover = std::move(cover);
        }
    }
    if (options.trace) result.trace = unwind(branches[chosen].trace);
    return result;
}

PathCover solve_1pc(const OrderedGraph& g, std::optional<Vertex> terminal) {
    return solve_1pc_detailed(g, terminal).cover;
}

PathCover min_path_cover(const OrderedGraph& g) { return solve_1pc(g, std::nullopt); }

}  // namespace ipc
