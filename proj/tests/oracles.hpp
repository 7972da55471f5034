#pragma once

// Test-only oracles, deliberately independent of the production search paths:
// explicit geodesic enumeration for visibility, exhaustive subset scans for
// the optimization problems, hand-rolled BFS distances, and full matrix
// enumeration for tiny Zarankiewicz instances.

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "mutvis/graph.hpp"
#include "mutvis/visibility.hpp"
#include "mutvis/zarankiewicz.hpp"

namespace oracles {

inline std::vector<int> bfs_dist(const mutvis::Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

/// Every shortest x,y-path, by DFS over the distance levels.
inline std::vector<std::vector<int>> all_geodesics(const mutvis::Graph& g, int x, int y) {
    auto dx = bfs_dist(g, x);
    auto dy = bfs_dist(g, y);
    int total = dx[static_cast<std::size_t>(y)];
    std::vector<std::vector<int>> paths;
    std::vector<int> cur{x};
    std::function<void(int)> dfs = [&](int v) {
        if (v == y) {
            paths.push_back(cur);
            return;
        }
        int level = dx[static_cast<std::size_t>(v)];
        for (int w : g.adj[static_cast<std::size_t>(v)]) {
            if (dx[static_cast<std::size_t>(w)] == level + 1 &&
                dy[static_cast<std::size_t>(w)] == total - level - 1) {
                cur.push_back(w);
                dfs(w);
                cur.pop_back();
            }
        }
    };
    dfs(x);
    return paths;
}

/// X-visibility by explicit enumeration: some geodesic has no interior vertex
/// in X.
inline bool visible_by_enumeration(const mutvis::Graph& g, const mutvis::VertexSet& x_set, int x,
                                   int y) {
    if (x == y) return true;
    for (const auto& path : all_geodesics(g, x, y)) {
        bool clean = true;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (x_set.contains(path[i])) {
                clean = false;
                break;
            }
        if (clean) return true;
    }
    return false;
}

inline bool mv_by_enumeration(const mutvis::Graph& g, const mutvis::VertexSet& x_set) {
    auto members = x_set.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!visible_by_enumeration(g, x_set, members[i], members[j])) return false;
    return true;
}

inline bool gp_by_distances(const mutvis::Graph& g, const mutvis::VertexSet& s) {
    auto members = s.to_vector();
    std::vector<std::vector<int>> d;
    for (int v = 0; v < g.n; ++v) d.push_back(bfs_dist(g, v));
    for (int u : members)
        for (int v : members)
            for (int w : members) {
                if (u == v || v == w || u == w) continue;
                if (d[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] +
                        d[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] ==
                    d[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)])
                    return false;
            }
    return true;
}

inline bool independent_by_edges(const mutvis::Graph& g, const mutvis::VertexSet& s) {
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.has_edge(members[i], members[j])) return false;
    return true;
}

/// 2^n subset scan; pred receives each subset of vertices.
inline int brute_force_max(const mutvis::Graph& g,
                           const std::function<bool(const mutvis::VertexSet&)>& pred) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
        mutvis::VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) s.add(v);
        if (s.size() > best && pred(s)) best = s.size();
    }
    return best;
}

inline int brute_force_mu(const mutvis::Graph& g) {
    return brute_force_max(g, [&](const mutvis::VertexSet& s) { return mv_by_enumeration(g, s); });
}

inline int brute_force_mu_i(const mutvis::Graph& g) {
    return brute_force_max(g, [&](const mutvis::VertexSet& s) {
        return independent_by_edges(g, s) && mv_by_enumeration(g, s);
    });
}

inline int brute_force_alpha(const mutvis::Graph& g) {
    return brute_force_max(g,
                           [&](const mutvis::VertexSet& s) { return independent_by_edges(g, s); });
}

inline int brute_force_gp(const mutvis::Graph& g) {
    return brute_force_max(g, [&](const mutvis::VertexSet& s) { return gp_by_distances(g, s); });
}

/// Include/skip search that re-validates the whole set with the full predicate
/// at every extension: the correct-by-construction fallback the incremental
/// solver is measured against. Reaches sizes where 2^n scans cannot.
template <typename Pred>
inline int fallback_max(const mutvis::Graph& g, const Pred& pred) {
    int best = 0;
    mutvis::VertexSet x(g.n);
    std::function<void(int)> dfs = [&](int pos) {
        best = std::max(best, x.size());
        if (pos == g.n || x.size() + g.n - pos <= best) return;
        x.add(pos);
        if (pred(x)) dfs(pos + 1);
        x.remove(pos);
        dfs(pos + 1);
    };
    dfs(0);
    return best;
}

inline int fallback_max_mv(const mutvis::Graph& g) {
    mutvis::VisibilityOracle vis(g);
    return fallback_max(g, [&](const mutvis::VertexSet& s) { return vis.is_mv_set(s); });
}

inline int fallback_max_gp(const mutvis::Graph& g) {
    mutvis::VisibilityOracle vis(g);
    return fallback_max(g, [&](const mutvis::VertexSet& s) { return vis.is_gp_set(s); });
}

/// Lexicographically smallest optimum by full subset enumeration.
inline std::vector<int> brute_force_lexmin_witness(
    const mutvis::Graph& g, const std::function<bool(const mutvis::VertexSet&)>& pred) {
    int best = 0;
    std::vector<int> witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
        mutvis::VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if ((mask >> v) & 1) s.add(v);
        if (!pred(s)) continue;
        auto vec = s.to_vector();
        if (s.size() > best || (s.size() == best && vec < witness)) {
            best = s.size();
            witness = vec;
        }
    }
    return witness;
}

/// Independent 2x2 block detector: scans every row pair and column pair.
inline bool has_2x2_quad_scan(const mutvis::BinaryMatrix& m) {
    for (int r1 = 0; r1 < m.rows(); ++r1)
        for (int r2 = r1 + 1; r2 < m.rows(); ++r2)
            for (int c1 = 0; c1 < m.cols(); ++c1)
                for (int c2 = c1 + 1; c2 < m.cols(); ++c2)
                    if (m.get(r1, c1) && m.get(r1, c2) && m.get(r2, c1) && m.get(r2, c2))
                        return true;
    return false;
}

/// z(m,n;2,2) by full enumeration of all 2^(m n) matrices.
inline int brute_force_z22(int m, int n) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        mutvis::BinaryMatrix mat(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if ((mask >> (i * n + j)) & 1) mat.set(i, j, true);
        if (mat.ones() > best && !has_2x2_quad_scan(mat)) best = mat.ones();
    }
    return best;
}

/// General z(m,n;s,t) by full enumeration with a direct block scan.
inline bool has_block_direct(const mutvis::BinaryMatrix& m, int s, int t) {
    std::vector<int> rows_sel;
    std::function<bool(int, int)> choose_rows = [&](int from, int need) -> bool {
        if (need == 0) {
            int common = 0;
            for (int c = 0; c < m.cols(); ++c) {
                bool all = true;
                for (int r : rows_sel)
                    if (!m.get(r, c)) {
                        all = false;
                        break;
                    }
                if (all) ++common;
            }
            return common >= t;
        }
        for (int r = from; r < m.rows(); ++r) {
            rows_sel.push_back(r);
            if (choose_rows(r + 1, need - 1)) return true;
            rows_sel.pop_back();
        }
        return false;
    };
    return choose_rows(0, s);
}

inline int brute_force_z(int m, int n, int s, int t) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
        mutvis::BinaryMatrix mat(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if ((mask >> (i * n + j)) & 1) mat.set(i, j, true);
        if (mat.ones() > best && !has_block_direct(mat, s, t)) best = mat.ones();
    }
    return best;
}

/// Labeled connected graph counts from the standard divide-out recurrence;
/// independent of the enumeration code under test.
inline std::vector<std::uint64_t> connected_count_by_recurrence(int max_n) {
    auto binom = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - i + 1) / i;
        return r;
    };
    std::vector<std::uint64_t> all(static_cast<std::size_t>(max_n) + 1, 0);
    std::vector<std::uint64_t> conn(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n) all[static_cast<std::size_t>(n)] = std::uint64_t{1} << (n * (n - 1) / 2);
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t s = all[static_cast<std::size_t>(n)];
        for (int k = 1; k < n; ++k)
            s -= binom(n - 1, k - 1) * conn[static_cast<std::size_t>(k)] *
                 all[static_cast<std::size_t>(n - k)];
        conn[static_cast<std::size_t>(n)] = s;
    }
    return conn;
}

} // namespace oracles
