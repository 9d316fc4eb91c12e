#include <sstream>

#include <doctest.h>

#include "ipc/bipartite.hpp"
#include "ipc/errors.hpp"

using namespace ipc;

namespace {

std::vector<std::string> names(char side, int k) {
    std::vector<std::string> out;
    for (int i = 1; i <= k; ++i) out.push_back(std::string(1, side) + std::to_string(i));
    return out;
}

BipartiteConvexGraph bip(int nx, int ny, const std::vector<std::pair<int, int>>& edges,
                         Convexity c = Convexity::Biconvex) {
    return BipartiteConvexGraph(names('x', nx), names('y', ny), edges, c);
}

// y1 - x1 - y2 - x2 - y3
BipartiteConvexGraph p5() { return bip(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("bipartite: construction and convexity") {
    const BipartiteConvexGraph g = p5();
    CHECK(g.nx() == 2);
    CHECK(g.ny() == 3);
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.y_neighbors(2) == std::vector<int>{1, 2});
    CHECK(g.x_convex());
    CHECK(g.y_convex());

    // y1 sees x1 and x3 but not x2
    try {
        (void)bip(3, 1, {{1, 1}, {3, 1}}, Convexity::XConvex);
        FAIL("expected ConvexityViolation");
    } catch (const ConvexityViolation& e) {
        CHECK(e.side() == Side::Y);
        CHECK(e.vertex() == 1);
    }
    // X-convex but not biconvex: x1 sees y1 and y3
    CHECK_NOTHROW((void)bip(2, 3, {{1, 1}, {1, 3}, {2, 2}}, Convexity::XConvex));
    CHECK_THROWS_AS((void)bip(2, 3, {{1, 1}, {1, 3}, {2, 2}}), ConvexityViolation);
    CHECK_THROWS_AS((void)bip(2, 2, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteConvexGraph({"a", "a"}, {"b"}, {}, Convexity::XConvex), std::invalid_argument);
}

TEST_CASE("bipartite: parse and write") {
    const BipartiteConvexGraph g = p5();
    std::ostringstream out;
    g.write(out);
    std::istringstream in(out.str());
    const BipartiteConvexGraph h = BipartiteConvexGraph::parse(in);
    CHECK(h.edges() == g.edges());
    CHECK(h.convexity() == Convexity::Biconvex);
    CHECK(h.y_label(3) == "y3");

    // X-convex input may leave the Y order to the edge list
    std::istringstream x("X=2 Y=2 convex=x\nX: a b\na q\nb p\n");
    const BipartiteConvexGraph xg = BipartiteConvexGraph::parse(x);
    CHECK(xg.y_label(1) == "q");
    CHECK(xg.adjacent(2, 2));

    std::istringstream missing_y("X=1 Y=1 convex=bi\nX: a\na b\n");
    CHECK_THROWS_AS(BipartiteConvexGraph::parse(missing_y), ParseError);
    std::istringstream unknown("X=1 Y=1 convex=x\nX: a\na b\nc b\n");
    CHECK_THROWS_AS(BipartiteConvexGraph::parse(unknown), ParseError);
}

TEST_CASE("convexify") {
    SUBCASE("path adds consecutive Y pairs only") {
        const BipartiteConvexGraph g = p5();
        const Convexified c = convexify(g, AddedEdges::YEdges);
        CHECK_FALSE(check_convexified(g, c, AddedEdges::YEdges));
        const auto y = [&](int k) { return c.at({Side::Y, k}); };
        CHECK(c.graph.adjacent(y(1), y(2)));
        CHECK(c.graph.adjacent(y(2), y(3)));
        CHECK_FALSE(c.graph.adjacent(y(1), y(3)));
        CHECK_FALSE(c.graph.adjacent(c.at({Side::X, 1}), c.at({Side::X, 2})));
    }
    SUBCASE("single edge") {
        const BipartiteConvexGraph g = bip(1, 1, {{1, 1}});
        const Convexified c = convexify(g, AddedEdges::YEdges);
        CHECK(c.graph.edge_count() == 1);
    }
    SUBCASE("twins") {
        const BipartiteConvexGraph g = bip(2, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
        const Convexified c = convexify(g, AddedEdges::YEdges);
        CHECK(c.graph.edge_count() == 6 + 3);
    }
    SUBCASE("isolated vertices get private points") {
        const BipartiteConvexGraph g = bip(3, 2, {{1, 1}});
        const Convexified c = convexify(g, AddedEdges::YEdges);
        CHECK(c.graph.edge_count() == 1);
        CHECK_FALSE(check_convexified(g, c, AddedEdges::YEdges));
    }
}

TEST_CASE("hp_biconvex") {
    const BipartiteConvexGraph g = p5();
    const auto p = hp_biconvex(g);
    REQUIRE(p);
    CHECK(is_hamiltonian_path(g, *p));

    CHECK_FALSE(hp_biconvex(bip(3, 1, {{1, 1}, {2, 1}, {3, 1}})));

    // C4 = K2,2
    const BipartiteConvexGraph c4 = bip(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    REQUIRE(hp_biconvex(c4));
    CHECK(is_hamiltonian_path(c4, *hp_biconvex(c4)));

    // three pendant Y vertices on one X vertex
    std::vector<std::string> notes;
    CHECK_FALSE(hp_biconvex(bip(3, 3, {{1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 3}}), &notes));
    CHECK_FALSE(notes.empty());
}

TEST_CASE("onehp_biconvex") {
    const BipartiteConvexGraph g = p5();
    const auto p = onehp_biconvex(g, 1);
    REQUIRE(p);
    CHECK(*p == BipPath{{Side::Y, 1}, {Side::X, 1}, {Side::Y, 2}, {Side::X, 2}, {Side::Y, 3}});
    CHECK_FALSE(onehp_biconvex(g, 2));
    CHECK_THROWS_AS((void)onehp_biconvex(g, 0), StartNotInY);
    CHECK_THROWS_AS((void)onehp_biconvex(g, 4), StartNotInY);

    // |X| - |Y| = 1
    const BipartiteConvexGraph h = bip(3, 2, {{1, 1}, {2, 1}, {2, 2}, {3, 2}});
    CHECK_FALSE(onehp_biconvex(h, 1));
    CHECK(hp_biconvex(h));
}

TEST_CASE("x-convex variants") {
    // |Y| - |X| = 1
    const BipartiteConvexGraph g = bip(2, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}}, Convexity::XConvex);
    CHECK_FALSE(onehp_xconvex(g, {Side::X, 1}));
    CHECK_THROWS_AS((void)hp_xconvex(g), UnsupportedCase);
    CHECK_THROWS_AS((void)onehp_xconvex(g, {Side::Y, 1}), UnsupportedCase);

    // |X| = |Y|, x1 sees y1 and y3 so the graph is not biconvex
    const BipartiteConvexGraph e = bip(3, 3, {{1, 1}, {1, 3}, {2, 2}, {3, 2}, {2, 3}}, Convexity::XConvex);
    CHECK_FALSE(e.y_convex());
    CHECK(hp_xconvex(e).has_value() == oracle_hamiltonian_path(e).has_value());
    CHECK_THROWS_AS((void)onehp_xconvex(e, {Side::X, 1}), UnsupportedCase);
    CHECK(onehp_xconvex(e, {Side::Y, 2}).has_value() == oracle_hamiltonian_path(e, BipVertex{Side::Y, 2}).has_value());
}

TEST_CASE("bipartite answers match brute force on small graphs") {
    int graphs = 0;
    for (int nx = 1; nx <= 3; ++nx) {
        for (int ny = 1; ny <= 3; ++ny) {
            for_each_biconvex_graph(nx, ny, [&](const BipartiteConvexGraph& g) {
                ++graphs;
                const auto hp = hp_biconvex(g);
                REQUIRE(hp.has_value() == oracle_hamiltonian_path(g).has_value());
                if (hp) REQUIRE(is_hamiltonian_path(g, *hp));
                for (int y = 1; y <= ny; ++y) {
                    const auto p = onehp_biconvex(g, y);
                    REQUIRE(p.has_value() == oracle_hamiltonian_path(g, BipVertex{Side::Y, y}).has_value());
                    if (p) REQUIRE(is_hamiltonian_path(g, *p, BipVertex{Side::Y, y}));
                }
                return true;
            });
        }
    }
    CHECK(graphs > 0);
}

TEST_CASE("gen_biconvex") {
    Rng rng(4);
    for (int k = 0; k < 100; ++k) {
        const BipartiteConvexGraph g = gen_biconvex(1 + static_cast<int>(rng.uniform(0, 6)),
                                                    static_cast<int>(rng.uniform(0, 6)), rng.unit(), rng);
        CHECK(g.x_convex());
        CHECK(g.y_convex());
    }
    const BipartiteConvexGraph full = gen_biconvex(3, 4, 1.0, rng);
    CHECK(full.edges().size() == 12);
}

TEST_CASE("G' Hamiltonian but G not") {
    CHECK_FALSE(find_observation51_counterexample(2));
    const auto g = find_observation51_counterexample(3);
    REQUIRE(g);
    CHECK(g->nx() == 3);
    CHECK(find_hamiltonian_path(SmallGraph::from(convexify(*g, AddedEdges::YEdges).graph)));
    CHECK_FALSE(oracle_hamiltonian_path(*g));
    // hp_biconvex is not fooled
    CHECK_FALSE(hp_biconvex(*g));
}
