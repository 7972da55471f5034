#include <doctest.h>

#include <algorithm>

#include "mutvis/constructions.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/theorems.hpp"
#include "oracles.hpp"

using namespace mutvis;

TEST_CASE("make_frog shapes") {
    CHECK(is_isomorphic(make_frog(6, 1, 1), cycle_graph(6)));
    CHECK(degree_sequence(make_frog(4, 2, 2)) == std::vector<int>{1, 1, 2, 2, 3, 3});
    CHECK(make_frog(6, 3, 2).n == 9);
    CHECK_THROWS_AS(make_frog(2, 1, 1), InvalidInputError);
    CHECK_THROWS_AS(make_frog(5, 0, 1), InvalidInputError);

    // exactly one cycle: |E| = |V|
    for (int c = 3; c <= 8; ++c)
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 3; ++s) {
                Graph f = make_frog(c, r, s);
                CHECK(f.m == f.n);
                CHECK(is_connected(f));
            }

    // junction degree: 3 when a path is attached, 2 otherwise
    Graph f = make_frog(8, 3, 1);
    CHECK(f.degree(0) == 3);
    CHECK(f.degree(4) == 2);
}

TEST_CASE("frog mutual-visibility values") {
    CHECK(solve_mu(make_frog(6, 3, 2)).value == 3);
    CHECK(solve_mu(make_frog(5, 1, 1)).value == 3);
    CHECK(solve_mu(make_frog(4, 2, 2)).value == 3);
}

TEST_CASE("graph H") {
    Graph h = make_graph_h();
    CHECK(h.n == 6);
    CHECK(degree_sequence(h) == std::vector<int>{1, 1, 1, 1, 3, 3});
    CHECK(is_triangle_free(h));
    CHECK(max_degree(h) == 3);
    CHECK(oracles::brute_force_mu(h) == 4);
    CHECK(solve_mu(h).value == 4);
}

TEST_CASE("standard graph families") {
    CHECK(path_graph(1).n == 1);
    CHECK(path_graph(1).m == 0);

    Graph pet = petersen_graph();
    CHECK(pet.n == 10);
    CHECK(pet.m == 15);
    CHECK(girth(pet).value() == 5);

    Graph grid = grid_graph(2, 3);
    CHECK(grid.n == 6);
    CHECK(grid.m == 7);

    CHECK(star_graph(3).n == 4);
    CHECK(edgeless_graph(3).m == 0);
    CHECK(complete_graph(4).m == 6);

    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph t = random_tree(2 + static_cast<int>(seed % 10), seed);
        CHECK(t.m == t.n - 1);
        CHECK(is_connected(t));
    }
    // same seed, same tree
    CHECK(random_tree(9, 42).edges() == random_tree(9, 42).edges());
}

TEST_CASE("recognize_frog accepts frogs and recovers the spec") {
    auto c9 = recognize_frog(cycle_graph(9));
    REQUIRE(c9.has_value());
    CHECK(c9->cycle_len == 9);
    CHECK(c9->r == 1);
    CHECK(c9->s == 1);

    auto spec = recognize_frog(make_frog(8, 3, 3));
    REQUIRE(spec.has_value());
    CHECK(spec->cycle_len == 8);
    CHECK(spec->r == 3);
    CHECK(spec->s == 3);

    // generator/recognizer round trip up to swapping (r, s)
    for (int c = 3; c <= 10; ++c)
        for (int r = 1; r <= 4; ++r)
            for (int s = 1; s <= r; ++s) {
                auto rec = recognize_frog(make_frog(c, r, s));
                REQUIRE(rec.has_value());
                CHECK(rec->cycle_len == c);
                CHECK(rec->r == std::max(r, s));
                CHECK(rec->s == std::min(r, s));
                // junctions are antipodal on the cycle
                Graph f = make_frog(c, r, s);
                auto d = all_pairs_distances(f);
                if (rec->r > 1 && rec->s > 1)
                    CHECK(d.at(rec->junction_r, rec->junction_s) == c / 2);
            }

    // odd cycle: either antipodal placement is accepted
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 7; ++i) edges.emplace_back(i, (i + 1) % 7);
    edges.emplace_back(0, 7); // pendant at 0
    edges.emplace_back(4, 8); // pendant at distance 3 the other way round
    auto odd = recognize_frog(build_graph(9, edges));
    REQUIRE(odd.has_value());
    CHECK(odd->cycle_len == 7);
}

TEST_CASE("recognize_frog rejects non-frogs") {
    CHECK_FALSE(recognize_frog(path_graph(5)).has_value());
    CHECK_FALSE(recognize_frog(make_graph_h()).has_value());
    CHECK_FALSE(recognize_frog(star_graph(3)).has_value());
    CHECK_FALSE(recognize_frog(petersen_graph()).has_value());

    // two cycles sharing an edge
    Graph theta = build_graph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_FALSE(recognize_frog(theta).has_value());

    // pendants at non-antipodal cycle vertices
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    edges.emplace_back(0, 6);
    edges.emplace_back(2, 7); // distance 2, not antipodal (3)
    CHECK_FALSE(recognize_frog(build_graph(8, edges)).has_value());

    // branching attachment (degree-3 vertex off the cycle)
    std::vector<std::pair<int, int>> edges2;
    for (int i = 0; i < 6; ++i) edges2.emplace_back(i, (i + 1) % 6);
    edges2.emplace_back(0, 6);
    edges2.emplace_back(6, 7);
    edges2.emplace_back(6, 8);
    CHECK_FALSE(recognize_frog(build_graph(9, edges2)).has_value());

    // degree-4 cycle vertex
    std::vector<std::pair<int, int>> edges3;
    for (int i = 0; i < 6; ++i) edges3.emplace_back(i, (i + 1) % 6);
    edges3.emplace_back(0, 6);
    edges3.emplace_back(0, 7);
    CHECK_FALSE(recognize_frog(build_graph(8, edges3)).has_value());
}

TEST_CASE("tree and path recognizers") {
    CHECK(is_tree_with_three_leaves(spider_graph({1, 2, 3})));
    CHECK(is_tree_with_three_leaves(star_graph(3)));
    CHECK_FALSE(is_tree_with_three_leaves(path_graph(5)));
    CHECK_FALSE(is_tree_with_three_leaves(cycle_graph(5)));
    CHECK(is_path_graph(path_graph(1)));
    CHECK(is_path_graph(path_graph(6)));
    CHECK_FALSE(is_path_graph(star_graph(3)));
    CHECK(leaf_count(spider_graph({2, 2, 1, 1})) == 4);
}

TEST_CASE("geodetic recognizer") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) CHECK(is_geodetic(random_tree(8, seed)));
    CHECK_FALSE(is_geodetic(cycle_graph(4)));
    CHECK_FALSE(is_geodetic(cycle_graph(6)));
    CHECK(is_geodetic(cycle_graph(5)));
    CHECK(is_geodetic(petersen_graph()));
    CHECK(is_geodetic(complete_graph(5)));
}

TEST_CASE("graph spec grammar") {
    CHECK(from_spec("frog:6,3,2").n == 9);
    Graph k33 = from_spec("cartesian:complete:3,complete:3");
    CHECK(k33.n == 9);
    CHECK(k33.m == 18);
    CHECK(is_isomorphic(from_spec("corona:path:2,edgeless:2"), make_graph_h()));
    CHECK(from_spec("grid:2,3").m == 7);
    CHECK(from_spec("petersen").n == 10);
    CHECK(from_spec("tree:10,7").n == 10);
    CHECK(is_isomorphic(from_spec("cartesian:path:2,path:2"), cycle_graph(4)));

    CHECK_THROWS_AS(from_spec("wedge:4"), ParseError);
    CHECK_THROWS_AS(from_spec("cycle"), ParseError);
    CHECK_THROWS_AS(from_spec("cycle:x"), ParseError);
    CHECK_THROWS_AS(from_spec("cycle:2"), ParseError);
    CHECK_THROWS_AS(from_spec("cycle:5,9"), ParseError);
    CHECK_THROWS_AS(from_spec("cartesian:path:3"), ParseError);
}
