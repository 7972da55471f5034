#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/product.hpp"

namespace mutvis {

/// A frog graph: a cycle of length `cycle_len` with paths of orders r and s
/// attached at two antipodal junction vertices (path order 1 means no
/// attachment; r = s = 1 is the bare cycle).
struct FrogSpec {
    int cycle_len = 3;
    int r = 1;
    int s = 1;
    int junction_r = 0;
    int junction_s = 0;
};

/// Builds the frog graph for (c, r, s): cycle vertices 0..c-1, junctions at 0
/// and floor(c/2), attached path vertices appended afterwards.
Graph make_frog(int cycle_len, int r, int s);
Graph make_frog(const FrogSpec& spec);

/// The 6-vertex graph formed by joining the centers of two disjoint 3-vertex
/// paths with an edge. Degrees (3,3,1,1,1,1).
Graph make_graph_h();

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}
Graph grid_graph(int rows, int cols);
Graph petersen_graph();

/// Tree with one center vertex and paths ("legs") of the given lengths.
Graph spider_graph(const std::vector<int>& leg_lengths);

/// Uniform random labeled tree from a seeded Prufer sequence; reproducible
/// across platforms for a fixed seed.
Graph random_tree(int n, std::uint64_t seed);

/// Recognizes frog graphs, returning the recovered spec (r >= s) or nullopt.
std::optional<FrogSpec> recognize_frog(const Graph& g);

bool is_tree(const Graph& g);
int leaf_count(const Graph& g);
bool is_tree_with_three_leaves(const Graph& g);
bool is_path_graph(const Graph& g);

/// True iff every vertex pair is joined by exactly one shortest path.
bool is_geodetic(const Graph& g);

/// Builds a graph from a family spec string, e.g. "cycle:8", "grid:3,4",
/// "frog:6,3,2", "cartesian:complete:3,complete:3", "corona:path:2,edgeless:2",
/// "tree:10,42", "petersen", "graph_h". Throws ParseError on bad specs.
Graph from_spec(const std::string& spec);

/// The family grammar accepted by from_spec, for error messages and docs.
std::vector<std::string> spec_families();

} // namespace mutvis
