#pragma once

#include <vector>

#include "mutvis/graph.hpp"

namespace mutvis {

/// Hard upper limit on the order of graphs accepted by the visibility oracle
/// and everything built on it (solvers, theorem checks). Keeps vertex sets
/// within a fixed number of machine words.
constexpr int kHardVertexCap = 512;

/// All vertices lying on at least one shortest x,y-path:
/// v is a member iff d(x,v) + d(v,y) = d(x,y).
struct GeodesicInterval {
    int x = 0;
    int y = 0;
    VertexSet members;
};

/// Precomputed distance levels for fast pair-visibility queries. Immutable and
/// safely shareable across threads.
///
/// The pair predicate asks: is there a shortest x,y-path whose interior avoids
/// the blocker set? It runs a reachability sweep over the level DAG of the
/// geodesic interval, one distance level per step, entirely on bit rows.
class VisibilityOracle {
public:
    explicit VisibilityOracle(const Graph& g) : VisibilityOracle(g, all_pairs_distances(g)) {}
    VisibilityOracle(const Graph& g, DistanceMatrix d);

    const Graph& graph() const { return g_; }
    const DistanceMatrix& dist() const { return d_; }

    GeodesicInterval interval(int x, int y) const;

    /// True iff x and y are visible with blocker set `set` minus {x,y}.
    /// x == y and adjacent pairs are vacuously visible.
    bool visible(const VertexSet& set, int x, int y) const;

    bool is_mv_set(const VertexSet& x) const;
    bool is_independent_set(const VertexSet& x) const;
    bool is_independent_mv_set(const VertexSet& x) const;
    bool is_gp_set(const VertexSet& s) const;

    /// Number of shortest x,y-paths, saturating at 2^32 (only ==1 decisions
    /// are meaningful beyond that point).
    std::uint64_t count_geodesics(int x, int y) const;

    /// The vertices at distance exactly `level` from u.
    const VertexSet& level_set(int u, int level) const {
        return levels_[static_cast<std::size_t>(u)][static_cast<std::size_t>(level)];
    }

private:
    Graph g_;
    DistanceMatrix d_;
    std::vector<std::vector<VertexSet>> levels_; // levels_[u][l] = {v : d(u,v) = l}
};

// Spec-shaped conveniences. The oracle form is preferred in hot paths.
GeodesicInterval geodesic_interval(const Graph& g, const DistanceMatrix& d, int x, int y);
bool are_x_visible(const Graph& g, const DistanceMatrix& d, const VertexSet& set, int x, int y);
bool is_mv_set(const Graph& g, const VertexSet& x);
bool is_independent_mv_set(const Graph& g, const VertexSet& x);
bool is_gp_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s);

} // namespace mutvis
