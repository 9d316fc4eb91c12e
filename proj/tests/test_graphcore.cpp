#include <algorithm>
#include <numeric>
#include <sstream>

#include <doctest.h>

#include "ipc/errors.hpp"
#include "ipc/generators.hpp"
#include "ipc/path_cover.hpp"
#include "test_util.hpp"

using namespace ipc;
using ipc::test::graph;
using ipc::test::model;

TEST_CASE("rational parse and order") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("interval model parse") {
    std::istringstream in("# two intervals\na 0 1/2\nb 1/3 2  # trailing\n\n");
    const IntervalModel m = IntervalModel::parse(in);
    REQUIRE(m.size() == 2);
    CHECK(m[0].right == Rational(1, 2));
    CHECK(m[0].intersects(m[1]));

    std::istringstream bad("a 0\n");
    CHECK_THROWS_AS(IntervalModel::parse(bad), ParseError);
    std::istringstream reversed("a 2 1\n");
    CHECK_THROWS_AS(IntervalModel::parse(reversed), ParseError);
    std::istringstream dup("a 0 1\na 2 3\n");
    CHECK_THROWS_AS(IntervalModel::parse(dup), ParseError);
}

TEST_CASE("build_ordering sorts by right endpoint") {
    const OrderedGraph g = build_ordering(model({{"a", 0, 5}, {"b", 1, 2}, {"c", 3, 4}}));
    REQUIRE(g.n() == 3);
    CHECK(g.label(1) == "b");
    CHECK(g.label(2) == "c");
    CHECK(g.label(3) == "a");
    CHECK(g.edges() == std::vector<Edge>{{1, 3}, {2, 3}});
    CHECK(g.leftmost_neighbor(3) == std::optional<Vertex>(1));
    CHECK_FALSE(g.leftmost_neighbor(2));
    CHECK(g.source_index(3) == 0);
    CHECK(g.find_label("c") == std::optional<Vertex>(2));
    CHECK_FALSE(g.find_label("z"));
}

TEST_CASE("build_ordering small cases") {
    const OrderedGraph one = build_ordering(model({{"a", 0, 0}}));
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);

    const OrderedGraph disjoint = build_ordering(model({{"c", 4, 5}, {"a", 0, 1}, {"b", 2, 3}}));
    CHECK(disjoint.edge_count() == 0);
    CHECK(disjoint.label(1) == "a");
    CHECK(disjoint.label(3) == "c");

    // touching endpoints intersect
    const OrderedGraph touch = build_ordering(model({{"a", 0, 1}, {"b", 1, 2}}));
    CHECK(touch.adjacent(1, 2));

    const OrderedGraph empty = build_ordering(IntervalModel{});
    CHECK(empty.n() == 0);
}

TEST_CASE("ordering property on random models") {
    Rng rng(7);
    for (int k = 0; k < 50; ++k) {
        const OrderedGraph g = build_ordering(gen_interval(20, rng.unit(), rng));
        for (Vertex i = 1; i <= g.n(); ++i) {
            for (Vertex j = i + 1; j <= g.n(); ++j) {
                for (Vertex l = j + 1; l <= g.n(); ++l) {
                    if (g.adjacent(i, l)) REQUIRE(g.adjacent(j, l));
                }
            }
        }
    }
}

TEST_CASE("leftmost_neighbor") {
    CHECK(test::complete(3).leftmost_neighbor(3) == std::optional<Vertex>(1));
    const OrderedGraph e = graph(4, {});
    for (Vertex v = 1; v <= 4; ++v) CHECK_FALSE(e.leftmost_neighbor(v));
}

TEST_CASE("validate_ordering") {
    const std::vector<Edge> p3{{1, 2}, {2, 3}};
    const std::vector<int> id{1, 2, 3};
    CHECK(validate_ordering(3, p3, id).n() == 3);

    const std::vector<Edge> only13{{1, 3}};
    try {
        (void)validate_ordering(3, only13, id);
        FAIL("expected OrderingViolation");
    } catch (const OrderingViolation& e) {
        CHECK(e.i() == 1);
        CHECK(e.j() == 2);
        CHECK(e.k() == 3);
    }

    // C4 has no interval ordering at all.
    const std::vector<Edge> c4{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
    std::vector<int> perm{1, 2, 3, 4};
    int rejected = 0;
    do {
        CHECK_THROWS_AS((void)validate_ordering(4, c4, perm), OrderingViolation);
        ++rejected;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(rejected == 24);
}

TEST_CASE("claimed order renumbers vertices") {
    // path 3-1-2: claiming (3, 1, 2) puts it in order
    std::istringstream in("3 2\n1 3\n1 2\npi: 3 1 2\n");
    const OrderedGraph g = AdjacencyInput::parse(in).to_graph();
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.label(1) == "3");
    CHECK(g.source_index(1) == 3);
}

TEST_CASE("adjacency parse errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return AdjacencyInput::parse(in).to_graph();
    };
    CHECK_THROWS_AS(parse("3 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1\n2 2\n"), ParseError);
    CHECK_THROWS_AS(parse("x\n"), ParseError);
    CHECK_THROWS_AS(parse("3 1\n1 3\n"), OrderingViolation);
}

TEST_CASE("adjacency round trip") {
    const OrderedGraph g = graph(5, {{1, 2}, {2, 3}, {1, 3}, {3, 5}, {4, 5}});
    std::ostringstream out;
    write_adjacency(out, g);
    std::istringstream in(out.str());
    const OrderedGraph h = AdjacencyInput::parse(in).to_graph();
    CHECK(h.edges() == g.edges());
}

TEST_CASE("path cover canonical form and round trip") {
    const PathCover c({{{4, 3}, PathKind::Free}, {{1, 2}, PathKind::Terminal}}, 2, 4);
    REQUIRE(c.lambda() == 2);
    CHECK(c.paths()[0].vertices == std::vector<Vertex>{2, 1});
    CHECK(c.paths()[0].kind == PathKind::Terminal);
    CHECK(c.paths()[1].vertices == std::vector<Vertex>{3, 4});
    CHECK(c.str() == "lambda=2 terminal=2 n=4\nP1 T: 2 1\nP2 F: 3 4\n");
    std::istringstream in(c.str());
    CHECK(PathCover::parse(in) == c);

    std::istringstream bad("lambda=3 terminal=none n=2\nP1 F: 1 2\n");
    CHECK_THROWS_AS(PathCover::parse(bad), ParseError);
}

TEST_CASE("ordered interval graph enumeration") {
    std::size_t count = 0;
    for_each_ordered_interval_graph(5, [&](const OrderedGraph&) {
        ++count;
        return true;
    });
    CHECK(count == 120);
}
