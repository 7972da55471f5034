#include "mutvis/product.hpp"

namespace mutvis {

std::pair<Graph, ProductLabeling> cartesian_product(const Graph& g, const Graph& h) {
    if (!is_connected(g) || !is_connected(h))
        throw DisconnectedError("cartesian_product requires connected factors");
    ProductLabeling lab(g.n, h.n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.m) * h.n + static_cast<std::size_t>(h.m) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b : g.adj[static_cast<std::size_t>(a)]) {
            if (b <= a) continue;
            for (int x = 0; x < h.n; ++x) edges.emplace_back(lab.forward(a, x), lab.forward(b, x));
        }
    for (int x = 0; x < h.n; ++x)
        for (int y : h.adj[static_cast<std::size_t>(x)]) {
            if (y <= x) continue;
            for (int a = 0; a < g.n; ++a) edges.emplace_back(lab.forward(a, x), lab.forward(a, y));
        }
    std::string name;
    if (!g.name.empty() && !h.name.empty()) name = g.name + " x " + h.name;
    return {build_graph(g.n * h.n, edges, std::move(name)), lab};
}

Graph corona(const Graph& g, const Graph& h) {
    // Vertices 0..n(G)-1 are G; copy i of H occupies n(G)+i*n(H) .. n(G)+(i+1)*n(H)-1.
    int n = g.n * (1 + h.n);
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < g.n; ++i) {
        int base = g.n + i * h.n;
        for (auto [x, y] : h.edges()) edges.emplace_back(base + x, base + y);
        for (int x = 0; x < h.n; ++x) edges.emplace_back(i, base + x);
    }
    std::string name;
    if (!g.name.empty() && !h.name.empty()) name = g.name + " o " + h.name;
    return build_graph(n, edges, std::move(name));
}

} // namespace mutvis
