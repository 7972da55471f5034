#include <doctest.h>

#include "mutvis/constructions.hpp"
#include "mutvis/theorems.hpp"
#include "mutvis/visibility.hpp"
#include "oracles.hpp"

using namespace mutvis;

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

VertexSet random_subset(int n, SplitMix& rng, int permille = 500) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
        if (rng.next() % 1000 < static_cast<std::uint64_t>(permille)) s.add(v);
    return s;
}

} // namespace

TEST_CASE("geodesic intervals") {
    VisibilityOracle c6(cycle_graph(6));
    CHECK(c6.interval(0, 3).members.size() == 6); // two disjoint geodesics cover the cycle

    VisibilityOracle p5(path_graph(5));
    CHECK(p5.interval(0, 4).members.size() == 5);

    VisibilityOracle k4(complete_graph(4));
    CHECK(k4.interval(1, 3).members == VertexSet::of(4, {1, 3}));
    CHECK(k4.interval(2, 2).members == VertexSet::of(4, {2}));

    // v in the interval iff the distance sums match
    Graph pet = petersen_graph();
    VisibilityOracle vis(pet);
    auto iv = vis.interval(0, 7);
    const auto& d = vis.dist();
    for (int v = 0; v < pet.n; ++v)
        CHECK(iv.members.contains(v) == (d.at(0, v) + d.at(v, 7) == d.at(0, 7)));
}

TEST_CASE("pair visibility on small named cases") {
    Graph p3 = path_graph(3);
    VisibilityOracle vp3(p3);
    CHECK_FALSE(vp3.visible(VertexSet::of(3, {0, 1, 2}), 0, 2)); // middle blocked

    Graph c4 = cycle_graph(4);
    VisibilityOracle vc4(c4);
    CHECK(vc4.visible(VertexSet::of(4, {0, 1, 2}), 0, 2)); // around the far side

    // All four corners of the square: opposite corners blocked both ways.
    VertexSet all4 = VertexSet::of(4, {0, 1, 2, 3});
    CHECK_FALSE(vc4.visible(all4, 0, 2));
    CHECK_FALSE(vc4.is_mv_set(all4));
}

TEST_CASE("mv predicate on named families") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph t = random_tree(4 + static_cast<int>(seed % 8), seed);
        VertexSet leaves(t.n);
        for (int v = 0; v < t.n; ++v)
            if (t.degree(v) == 1) leaves.add(v);
        CHECK(is_mv_set(t, leaves));
    }

    // Any set of at most two vertices is mutually visible.
    SplitMix rng{7};
    for (int k = 0; k < 20; ++k) {
        Graph g = random_connected_graph(6, rng.next());
        int a = static_cast<int>(rng.next() % 6), b = static_cast<int>(rng.next() % 6);
        CHECK(is_mv_set(g, VertexSet::of(6, {a, b})));
    }

    // The four pendants of H see each other in H itself.
    Graph h = make_graph_h();
    CHECK(is_mv_set(h, VertexSet::of(6, {0, 2, 3, 5})));

    // On complete graphs every subset is mutually visible.
    VisibilityOracle k5(complete_graph(5));
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        VertexSet s(5);
        for (int v = 0; v < 5; ++v)
            if ((mask >> v) & 1) s.add(v);
        CHECK(k5.is_mv_set(s));
    }
}

TEST_CASE("independent mv predicate") {
    Graph c6 = cycle_graph(6);
    CHECK(is_independent_mv_set(c6, VertexSet::of(6, {0, 2, 4})));
    CHECK_FALSE(is_independent_mv_set(c6, VertexSet::of(6, {0, 1})));

    // In diameter-2 graphs every independent set is an independent MV set.
    Graph pet = petersen_graph();
    VisibilityOracle vis(pet);
    SplitMix rng{21};
    int tested = 0;
    for (int k = 0; k < 200 && tested < 40; ++k) {
        VertexSet s = random_subset(pet.n, rng, 300);
        if (!vis.is_independent_set(s)) continue;
        ++tested;
        CHECK(vis.is_independent_mv_set(s));
    }
    CHECK(tested > 0);
}

TEST_CASE("gp predicate") {
    Graph p5 = path_graph(5);
    auto d = all_pairs_distances(p5);
    CHECK_FALSE(is_gp_set(p5, d, VertexSet::of(5, {0, 2, 4})));
    CHECK(is_gp_set(p5, d, VertexSet::of(5, {0, 4})));
}

TEST_CASE("visibility properties on random instances") {
    SplitMix rng{1234};
    int gp_seen = 0;
    for (int k = 0; k < 150; ++k) {
        int n = 4 + static_cast<int>(rng.next() % 5);
        Graph g = random_connected_graph(n, rng.next());
        VisibilityOracle vis(g);
        VertexSet x = random_subset(n, rng);

        // symmetry of pair visibility
        int a = static_cast<int>(rng.next() % n), b = static_cast<int>(rng.next() % n);
        CHECK(vis.visible(x, a, b) == vis.visible(x, b, a));
        CHECK(vis.visible(x, a, a));

        // adjacent pairs are visible under any blocker set
        for (int u = 0; u < n; ++u)
            for (int v : g.adj[static_cast<std::size_t>(u)]) CHECK(vis.visible(x, u, v));

        // gp implies mv
        if (vis.is_gp_set(x)) {
            ++gp_seen;
            CHECK(vis.is_mv_set(x));
        }

        // downward closure over all subsets of small MV sets
        if (x.size() <= 6 && vis.is_mv_set(x)) {
            auto members = x.to_vector();
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << members.size()); ++sub) {
                VertexSet y(n);
                for (std::size_t i = 0; i < members.size(); ++i)
                    if ((sub >> i) & 1) y.add(members[i]);
                CHECK(vis.is_mv_set(y));
            }
        }
    }
    CHECK(gp_seen > 0);
}

TEST_CASE("pair visibility agrees with explicit geodesic enumeration") {
    // Exhaustive over all connected graphs on up to 5 vertices, a few blocker
    // sets each, every pair.
    SplitMix rng{99};
    for (int n = 2; n <= 5; ++n) {
        enumerate_connected_graphs(n, false, [&](const Graph& g, std::uint64_t) {
            VisibilityOracle vis(g);
            for (int rep = 0; rep < 3; ++rep) {
                VertexSet x = random_subset(n, rng);
                for (int a = 0; a < n; ++a)
                    for (int b = a; b < n; ++b)
                        CHECK(vis.visible(x, a, b) == oracles::visible_by_enumeration(g, x, a, b));
            }
        });
    }
    // Random graphs up to 8 vertices.
    for (int k = 0; k < 60; ++k) {
        int n = 6 + static_cast<int>(rng.next() % 3);
        Graph g = random_connected_graph(n, rng.next());
        VisibilityOracle vis(g);
        VertexSet x = random_subset(n, rng);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                CHECK(vis.visible(x, a, b) == oracles::visible_by_enumeration(g, x, a, b));
    }
}

TEST_CASE("geodesic counting") {
    VisibilityOracle c4(cycle_graph(4));
    CHECK(c4.count_geodesics(0, 2) == 2);
    VisibilityOracle c6(cycle_graph(6));
    CHECK(c6.count_geodesics(0, 3) == 2);
    CHECK(c6.count_geodesics(0, 2) == 1);
    VisibilityOracle p7(path_graph(7));
    CHECK(p7.count_geodesics(0, 6) == 1);
    VisibilityOracle pet(petersen_graph());
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(pet.count_geodesics(u, v) == 1);

    // cross-check against full enumeration on random graphs
    SplitMix rng{5};
    for (int k = 0; k < 30; ++k) {
        Graph g = random_connected_graph(7, rng.next());
        VisibilityOracle vis(g);
        int a = static_cast<int>(rng.next() % 7), b = static_cast<int>(rng.next() % 7);
        if (a == b) continue;
        CHECK(vis.count_geodesics(a, b) == oracles::all_geodesics(g, a, b).size());
    }
}
