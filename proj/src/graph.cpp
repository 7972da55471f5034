#include "mutvis/graph.hpp"

#include <algorithm>
#include <queue>

namespace mutvis {

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
    if (n < 1) throw InvalidInputError("graph order must be at least 1, got " + std::to_string(n));
    Graph g;
    g.n = n;
    g.name = std::move(name);
    g.adj.assign(static_cast<std::size_t>(n), {});
    g.nbr.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
        if (u == v) throw InvalidInputError("self-loop at vertex " + std::to_string(u));
        if (g.nbr[static_cast<std::size_t>(u)].contains(v)) continue; // duplicate
        g.nbr[static_cast<std::size_t>(u)].add(v);
        g.nbr[static_cast<std::size_t>(v)].add(u);
        g.adj[static_cast<std::size_t>(u)].push_back(v);
        g.adj[static_cast<std::size_t>(v)].push_back(u);
        ++g.m;
    }
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::vector<int> frontier{source};
    std::vector<int> next;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        next.clear();
        for (int u : frontier) {
            for (int v : g.adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = level;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) best = std::max(best, g.degree(v));
    return best;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (v <= u) continue;
            if (g.nbr[static_cast<std::size_t>(u)].intersects(g.nbr[static_cast<std::size_t>(v)]))
                return false;
        }
    return true;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    return deg;
}

DistanceMatrix::DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {
    diam_ = *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.n) * g.n);
    for (int u = 0; u < g.n; ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = 0; v < g.n; ++v) {
            if (dist[static_cast<std::size_t>(v)] < 0)
                throw DisconnectedError("graph is disconnected: no path from " + std::to_string(u) +
                                        " to " + std::to_string(v));
            d[static_cast<std::size_t>(u) * g.n + v] = dist[static_cast<std::size_t>(v)];
        }
    }
    return {g.n, std::move(d)};
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& w) {
    std::vector<int> back = w.to_vector();
    std::vector<int> fwd(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < back.size(); ++i) fwd[static_cast<std::size_t>(back[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : back)
        for (int v : g.adj[static_cast<std::size_t>(u)])
            if (u < v && fwd[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(fwd[static_cast<std::size_t>(u)], fwd[static_cast<std::size_t>(v)]);
    return {build_graph(static_cast<int>(back.size()), edges), std::move(back)};
}

bool is_isometric_subgraph(const Graph& g, const VertexSet& w) {
    auto [sub, back] = induced_subgraph(g, w);
    auto sub_dist = all_pairs_distances(sub); // throws DisconnectedError for disconnected G[w]
    auto host_dist = all_pairs_distances(g);
    for (int i = 0; i < sub.n; ++i)
        for (int j = i + 1; j < sub.n; ++j)
            if (sub_dist.at(i, j) !=
                host_dist.at(back[static_cast<std::size_t>(i)], back[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-tree edge at/between frontier levels closes
    // a cycle of length 2*level or 2*level+1 through the root.
    int best = -1;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
        std::vector<int> parent(static_cast<std::size_t>(g.n), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::vector<long long> fingerprint(const Graph& g) {
    std::vector<long long> fp;
    auto deg = degree_sequence(g);
    fp.push_back(g.n);
    fp.push_back(g.m);
    fp.insert(fp.end(), deg.begin(), deg.end());
    auto d = all_pairs_distances(g);
    std::vector<long long> dists;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) dists.push_back(d.at(u, v));
    std::sort(dists.begin(), dists.end());
    fp.insert(fp.end(), dists.begin(), dists.end());
    return fp;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int u) {
    if (u == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
        if (used[static_cast<std::size_t>(w)]) continue;
        if (a.degree(u) != b.degree(w)) continue;
        bool ok = true;
        for (int prev = 0; prev < u; ++prev) {
            if (a.has_edge(u, prev) != b.has_edge(w, map[static_cast<std::size_t>(prev)])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[static_cast<std::size_t>(u)] = w;
        used[static_cast<std::size_t>(w)] = true;
        if (extend_isomorphism(a, b, map, used, u + 1)) return true;
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

} // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m != b.m) return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    std::vector<int> map(static_cast<std::size_t>(a.n), -1);
    std::vector<bool> used(static_cast<std::size_t>(a.n), false);
    return extend_isomorphism(a, b, map, used, 0);
}

} // namespace mutvis
