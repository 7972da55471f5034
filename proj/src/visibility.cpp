#include "mutvis/visibility.hpp"

#include <algorithm>
#include <array>

namespace mutvis {

namespace {
constexpr std::uint64_t kGeodesicSaturation = std::uint64_t{1} << 32;
constexpr int kMaxWords = (kHardVertexCap + 63) / 64;
} // namespace

VisibilityOracle::VisibilityOracle(const Graph& g, DistanceMatrix d) : g_(g), d_(std::move(d)) {
    if (g_.n > kHardVertexCap)
        throw CapExceededError("visibility oracle supports at most " +
                               std::to_string(kHardVertexCap) + " vertices, got " +
                               std::to_string(g_.n));
    levels_.assign(static_cast<std::size_t>(g_.n), {});
    for (int u = 0; u < g_.n; ++u) {
        auto& rows = levels_[static_cast<std::size_t>(u)];
        rows.assign(static_cast<std::size_t>(d_.diameter()) + 1, VertexSet(g_.n));
        for (int v = 0; v < g_.n; ++v) rows[static_cast<std::size_t>(d_.at(u, v))].add(v);
    }
}

GeodesicInterval VisibilityOracle::interval(int x, int y) const {
    GeodesicInterval iv{x, y, VertexSet(g_.n)};
    const int total = d_.at(x, y);
    const int* dx = d_.row(x);
    const int* dy = d_.row(y);
    for (int v = 0; v < g_.n; ++v)
        if (dx[v] + dy[v] == total) iv.members.add(v);
    return iv;
}

bool VisibilityOracle::visible(const VertexSet& set, int x, int y) const {
    const int total = d_.at(x, y);
    if (x == y || total <= 1) return true; // an edge is a geodesic with empty interior

    const int words = set.word_count();
    const std::uint64_t* blocked = set.words();

    // Sweep the level DAG of the interval: cur holds reachable vertices at the
    // current distance level from x. Interior levels exclude x and y by
    // construction, so the blocker bits of the endpoints are irrelevant.
    std::array<std::uint64_t, kMaxWords> cur{};
    std::array<std::uint64_t, kMaxWords> nxt{};
    cur[static_cast<std::size_t>(x) >> 6] = std::uint64_t{1} << (x & 63);

    for (int level = 1; level < total; ++level) {
        const std::uint64_t* lx = level_set(x, level).words();
        const std::uint64_t* ly = level_set(y, total - level).words();
        std::fill_n(nxt.begin(), words, 0);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cur[static_cast<std::size_t>(w)];
            while (bits) {
                int v = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* nb = g_.nbr[static_cast<std::size_t>(v)].words();
                for (int k = 0; k < words; ++k) nxt[static_cast<std::size_t>(k)] |= nb[k];
            }
        }
        bool any = false;
        for (int w = 0; w < words; ++w) {
            nxt[static_cast<std::size_t>(w)] &= lx[w] & ly[w] & ~blocked[w];
            any |= nxt[static_cast<std::size_t>(w)] != 0;
        }
        if (!any) return false;
        cur.swap(nxt);
    }

    const std::uint64_t* nby = g_.nbr[static_cast<std::size_t>(y)].words();
    for (int w = 0; w < words; ++w)
        if (cur[static_cast<std::size_t>(w)] & nby[w]) return true;
    return false;
}

bool VisibilityOracle::is_mv_set(const VertexSet& x) const {
    auto members = x.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!visible(x, members[i], members[j])) return false;
    return true;
}

bool VisibilityOracle::is_independent_set(const VertexSet& x) const {
    for (int v : x)
        if (g_.nbr[static_cast<std::size_t>(v)].intersects(x)) return false;
    return true;
}

bool VisibilityOracle::is_independent_mv_set(const VertexSet& x) const {
    return is_independent_set(x) && is_mv_set(x);
}

bool VisibilityOracle::is_gp_set(const VertexSet& s) const {
    // A triple is collinear iff its middle vertex lies on a geodesic between
    // the other two; checking every pair against every third member covers all
    // triples.
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], w = members[j];
            int duw = d_.at(u, w);
            for (int v : s) {
                if (v == u || v == w) continue;
                if (d_.at(u, v) + d_.at(v, w) == duw) return false;
            }
        }
    return true;
}

std::uint64_t VisibilityOracle::count_geodesics(int x, int y) const {
    const int total = d_.at(x, y);
    std::vector<std::uint64_t> sigma(static_cast<std::size_t>(g_.n), 0);
    sigma[static_cast<std::size_t>(x)] = 1;
    for (int level = 1; level <= total; ++level) {
        for (int v : level_set(x, level)) {
            if (d_.at(v, y) != total - level) continue;
            std::uint64_t acc = 0;
            for (int u : g_.adj[static_cast<std::size_t>(v)])
                if (d_.at(x, u) == level - 1) acc += sigma[static_cast<std::size_t>(u)];
            sigma[static_cast<std::size_t>(v)] = std::min(acc, kGeodesicSaturation);
        }
    }
    return sigma[static_cast<std::size_t>(y)];
}

GeodesicInterval geodesic_interval(const Graph& g, const DistanceMatrix& d, int x, int y) {
    return VisibilityOracle(g, d).interval(x, y);
}

bool are_x_visible(const Graph& g, const DistanceMatrix& d, const VertexSet& set, int x, int y) {
    return VisibilityOracle(g, d).visible(set, x, y);
}

bool is_mv_set(const Graph& g, const VertexSet& x) { return VisibilityOracle(g).is_mv_set(x); }

bool is_independent_mv_set(const Graph& g, const VertexSet& x) {
    return VisibilityOracle(g).is_independent_mv_set(x);
}

bool is_gp_set(const Graph& g, const DistanceMatrix& d, const VertexSet& s) {
    return VisibilityOracle(g, d).is_gp_set(s);
}

} // namespace mutvis
