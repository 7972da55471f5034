#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "mutvis/visibility.hpp"

namespace mutvis {

struct SolverOptions {
    int vertex_cap = 64; // configurable up to kHardVertexCap
    std::chrono::milliseconds timeout{60'000};
    int workers = 1;
    /// Prune with this known-achievable lower bound from the start. Callers
    /// must certify achievability beforehand (e.g. by validating a concrete
    /// set); an unachievable seed makes witness extraction fail loudly.
    int initial_lower_bound = 0;
};

/// Result of an exact maximization. When complete, value is the certified
/// optimum and witness is the optimal set whose sorted index sequence is
/// lexicographically smallest. On timeout, complete is false and value/witness
/// hold the best incumbent found (never claimed optimal).
struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
    bool complete = true;
};

SolveResult solve_mu(const Graph& g, const SolverOptions& opts = {});
SolveResult solve_mu_i(const Graph& g, const SolverOptions& opts = {});
SolveResult solve_alpha(const Graph& g, const SolverOptions& opts = {});
SolveResult solve_gp(const Graph& g, const SolverOptions& opts = {});

// Oracle-reusing variants for callers that solve several invariants on one graph.
SolveResult solve_mu(const VisibilityOracle& vis, const SolverOptions& opts = {});
SolveResult solve_mu_i(const VisibilityOracle& vis, const SolverOptions& opts = {});
SolveResult solve_alpha(const VisibilityOracle& vis, const SolverOptions& opts = {});
SolveResult solve_gp(const VisibilityOracle& vis, const SolverOptions& opts = {});

/// Exact size-k feasibility decisions. Much cheaper than a full solve when
/// only a threshold is needed (the families are downward closed, so
/// "exists a set of size k" is equivalent to "optimum >= k").
bool has_mv_set_of_size(const VisibilityOracle& vis, int k);
bool has_independent_mv_set_of_size(const VisibilityOracle& vis, int k);
bool has_gp_set_of_size(const VisibilityOracle& vis, int k);

/// Cheap certified bounds with the rules that produced them.
struct BoundsReport {
    int lower = 0;
    int upper = 0;
    std::vector<std::string> rules;
};

BoundsReport bounds_mu(const Graph& g);

/// True iff g has a (not necessarily induced) subgraph isomorphic to H, the
/// graph formed by joining the centers of two disjoint 3-vertex paths: an edge
/// uv where u and v each have two further neighbors, all six vertices distinct.
bool contains_subgraph_h(const Graph& g);

} // namespace mutvis
