#pragma once

#include <utility>

#include "mutvis/graph.hpp"

namespace mutvis {

/// Coordinate map V(G) x V(H) <-> V(G box H). Product vertex (g,h) gets index
/// g * n(H) + h. Layers are the fibers of one coordinate.
class ProductLabeling {
public:
    ProductLabeling() = default;
    ProductLabeling(int left_order, int right_order) : ng_(left_order), nh_(right_order) {}

    int left_order() const { return ng_; }
    int right_order() const { return nh_; }
    int product_order() const { return ng_ * nh_; }

    int forward(int g, int h) const { return g * nh_ + h; }
    std::pair<int, int> backward(int idx) const { return {idx / nh_, idx % nh_}; }

    /// G-layer through column h: all vertices (g, h).
    VertexSet left_layer(int h) const {
        VertexSet s(product_order());
        for (int g = 0; g < ng_; ++g) s.add(forward(g, h));
        return s;
    }

    /// H-layer through row g: all vertices (g, h).
    VertexSet right_layer(int g) const {
        VertexSet s(product_order());
        for (int h = 0; h < nh_; ++h) s.add(forward(g, h));
        return s;
    }

private:
    int ng_ = 0;
    int nh_ = 0;
};

/// Cartesian product: (g,h) ~ (g',h') iff gg' is an edge and h = h', or g = g'
/// and hh' is an edge. Both factors must be connected.
std::pair<Graph, ProductLabeling> cartesian_product(const Graph& g, const Graph& h);

/// Corona: G plus n(G) copies of H, copy i fully joined to vertex i of G.
/// H may be disconnected or edgeless.
Graph corona(const Graph& g, const Graph& h);

} // namespace mutvis
