#include <doctest.h>

#include "ipc/cover_engine.hpp"
#include "ipc/generators.hpp"
#include "ipc/oracle.hpp"
#include "ipc/verify.hpp"
#include "test_util.hpp"

using namespace ipc;
using ipc::test::graph;

namespace {

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
    for (const auto& x : v) {
        if (x.kind == k) return true;
    }
    return false;
}

PathCover cover(std::vector<std::vector<Vertex>> paths, std::optional<Vertex> t, int n) {
    std::vector<Path> ps;
    for (auto& p : paths) ps.push_back({std::move(p), PathKind::Free});
    return PathCover(std::move(ps), t, n);
}

}  // namespace

TEST_CASE("validate_cover") {
    const OrderedGraph k3 = test::complete(3);
    CHECK(validate_cover(k3, cover({{1, 2, 3}}, std::nullopt, 3), std::nullopt).empty());
    CHECK(validate_cover(k3, cover({{1, 2, 3}}, 1, 3), 1).empty());

    CHECK(has_kind(validate_cover(k3, cover({{1, 2}}, std::nullopt, 3), std::nullopt), ViolationKind::Coverage));
    CHECK(has_kind(validate_cover(k3, cover({{1, 2}, {2, 3}}, std::nullopt, 3), std::nullopt),
                   ViolationKind::Disjointness));
    CHECK(has_kind(validate_cover(k3, cover({{1, 2, 3}}, 2, 3), 2), ViolationKind::Terminal));

    const OrderedGraph p3 = graph(3, {{1, 2}, {2, 3}});
    CHECK(has_kind(validate_cover(p3, cover({{1, 3, 2}}, std::nullopt, 3), std::nullopt), ViolationKind::Adjacency));
    CHECK(has_kind(validate_cover(p3, cover({{1, 2, 3}}, std::nullopt, 4), std::nullopt), ViolationKind::Size));
}

TEST_CASE("check_nesting") {
    const auto nested = check_nesting(cover({{1, 4}, {2, 3}}, std::nullopt, 4));
    REQUIRE(nested);
    CHECK(nested->outer_path == 0);
    CHECK(nested->inner_path == 1);
    CHECK(nested->offending_endpoint == 2);
    // crossing counts too: 2 lies between 1 and 3
    CHECK(check_nesting(cover({{1, 3}, {2, 4}}, std::nullopt, 4)));
    CHECK_FALSE(check_nesting(cover({{1, 2}, {3, 4}}, std::nullopt, 4)));
    // the terminal path is not compared
    CHECK_FALSE(check_nesting(cover({{1, 4}, {2, 3}}, 1, 4)));
}

TEST_CASE("d-connectivity") {
    CHECK(d_connectivity(cover({{1, 2, 3}, {4}}, std::nullopt, 4)) == 4);
    CHECK(d_connectivity(cover({{1}, {2}}, std::nullopt, 2)) == 0);
}

TEST_CASE("epsilon profiles") {
    const PathCover c = cover({{1, 3}, {2}, {4, 5}}, std::nullopt, 5);
    CHECK(epsilon_profile(c) == std::vector<int>{3, 3, 2, 1, 1, 0});
    CHECK(epsilon_profile(c, EpsilonCount::Endpoints) == std::vector<int>{6, 5, 3, 2, 1, 0});
    CHECK(rightmost_endpoint(c) == 5);
    CHECK(rightmost_endpoint(PathCover{}) == 0);
}

TEST_CASE("oracle: known values") {
    CHECK(oracle_min_cover(test::complete(4), std::nullopt).min_size == 1);
    for (Vertex t = 1; t <= 4; ++t) CHECK(oracle_min_cover(test::complete(4), t).min_size == 1);
    const OrderedGraph star = graph(4, {{1, 4}, {2, 4}, {3, 4}});
    CHECK(oracle_min_cover(star, 4).min_size == 3);
    CHECK(oracle_min_cover(star, std::nullopt).min_size == 2);
    CHECK(oracle_min_cover(graph(5, {}), std::nullopt).min_size == 5);
    CHECK(oracle_min_cover(graph(0, {}), std::nullopt).min_size == 0);

    const OracleResult r = oracle_min_cover(graph(4, {{1, 2}, {2, 3}, {3, 4}}), 2);
    CHECK(r.min_size == 2);
    CHECK(validate_cover(graph(4, {{1, 2}, {2, 3}, {3, 4}}), r.witness, 2).empty());
}

TEST_CASE("oracle: enumeration of optima") {
    // P4 with terminal 2: {(2,1),(3,4)} and {(2,3,4),(1)}
    const OrderedGraph p4 = graph(4, {{1, 2}, {2, 3}, {3, 4}});
    const OracleResult r = oracle_min_cover(p4, 2, true);
    REQUIRE(r.all_optima);
    CHECK(r.all_optima->size() == 2);

    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
        const int n = 1 + static_cast<int>(rng.uniform(0, 5));
        const OrderedGraph g = gen_test_graph(n, rng);
        const std::optional<Vertex> t = rng.chance(0.5) ? std::optional<Vertex>(static_cast<Vertex>(rng.uniform(1, n)))
                                                        : std::nullopt;
        const OracleResult o = oracle_min_cover(g, t, true);
        REQUIRE(o.all_optima);
        CHECK(o.all_optima->size() == count_optimal_covers_by_permutation(g, t));
        for (const auto& c : *o.all_optima) CHECK(validate_cover(g, c, t).empty());
    }
}

TEST_CASE("oracle: size limits") {
    const OrderedGraph big = graph(13, {});
    CHECK_THROWS_AS((void)oracle_min_cover(big, std::nullopt), InstanceTooLarge);
    CHECK_THROWS_AS((void)oracle_min_cover(graph(9, {}), std::nullopt, true), InstanceTooLarge);
}

TEST_CASE("oracle: hamiltonian paths") {
    SmallGraph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 0);
    CHECK(find_hamiltonian_path(c4));
    CHECK(find_hamiltonian_path(c4, 2));

    SmallGraph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK_FALSE(find_hamiltonian_path(star));
    CHECK(oracle_min_size(star, 0) == 3);
    CHECK(oracle_min_size(star, std::nullopt) == 2);
}

TEST_CASE("engine outputs satisfy the structural checks") {
    Rng rng(21);
    for (int k = 0; k < 300; ++k) {
        const int n = 1 + static_cast<int>(rng.uniform(0, 49));
        const OrderedGraph g = gen_test_graph(n, rng);
        const Vertex t = static_cast<Vertex>(rng.uniform(1, n));
        const PathCover c = solve_1pc(g, t);
        REQUIRE(validate_cover(g, c, t).empty());
        REQUIRE_FALSE(check_nesting(c));
        REQUIRE(d_connectivity(c) == 2LL * (n - c.lambda()));
        REQUIRE(c.lambda() >= min_path_cover(g).lambda());
    }
}
