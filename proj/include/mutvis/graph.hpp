#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutvis/bitset.hpp"
#include "mutvis/errors.hpp"

namespace mutvis {

/// Simple undirected graph on dense 0-based vertex indices. Immutable after
/// construction via build_graph. Disconnected graphs are constructible (corona
/// inputs need them); distance computation and solvers reject them.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj; // sorted neighbor lists
    std::vector<VertexSet> nbr;        // per-vertex neighbor bit rows
    std::string name;                  // optional label, never consulted by algorithms

    int degree(int v) const { return static_cast<int>(adj[static_cast<std::size_t>(v)].size()); }
    bool has_edge(int u, int v) const { return nbr[static_cast<std::size_t>(u)].contains(v); }

    std::vector<std::pair<int, int>> edges() const;
};

/// Builds a canonical Graph: validates indices, rejects self-loops, collapses
/// duplicate edges. Throws InvalidInputError.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "");

bool is_connected(const Graph& g);
int max_degree(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Degree sequence sorted ascending.
std::vector<int> degree_sequence(const Graph& g);

/// All-pairs shortest-path hop counts with the diameter derived.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d);

    int order() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int diameter() const { return diam_; }
    const int* row(int u) const { return d_.data() + static_cast<std::size_t>(u) * n_; }

private:
    int n_ = 0;
    std::vector<int> d_;
    int diam_ = 0;
};

/// BFS from every vertex. Throws DisconnectedError when some pair is unreachable.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Single-source hop distances (-1 for unreachable).
std::vector<int> bfs_distances(const Graph& g, int source);

/// Induced subgraph on the members of w. Second return maps new indices back
/// to host vertices (ascending order of w).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& w);

/// True iff distances within G[w] equal host distances restricted to w.
/// Throws DisconnectedError when G[w] is disconnected.
bool is_isometric_subgraph(const Graph& g, const VertexSet& w);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Isomorphism-invariant fingerprint: sorted degree sequence plus sorted
/// distance multiset. Equal fingerprints are necessary, not sufficient, for
/// isomorphism. Requires a connected graph.
std::vector<long long> fingerprint(const Graph& g);

/// Exact isomorphism test by backtracking; intended for n <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace mutvis
