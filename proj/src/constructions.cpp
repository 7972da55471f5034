#include "mutvis/constructions.hpp"

#include <algorithm>
#include <cstdlib>

#include "mutvis/visibility.hpp"

namespace mutvis {

Graph make_frog(int cycle_len, int r, int s) {
    if (cycle_len < 3) throw InvalidInputError("frog cycle length must be at least 3");
    if (r < 1 || s < 1) throw InvalidInputError("frog path orders must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < cycle_len; ++i) edges.emplace_back(i, (i + 1) % cycle_len);
    int next = cycle_len;
    int prev = 0; // junction for P_r
    for (int i = 1; i < r; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    prev = cycle_len / 2; // antipodal junction for P_s
    for (int i = 1; i < s; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    return build_graph(cycle_len + (r - 1) + (s - 1), edges,
                       "frog(" + std::to_string(cycle_len) + "," + std::to_string(r) + "," +
                           std::to_string(s) + ")");
}

Graph make_frog(const FrogSpec& spec) { return make_frog(spec.cycle_len, spec.r, spec.s); }

Graph make_graph_h() {
    return build_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}}, "H");
}

Graph path_graph(int n) {
    if (n < 1) throw InvalidInputError("path order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(n, edges, "P_" + std::to_string(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInputError("cycle order must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return build_graph(n, edges, "C_" + std::to_string(n));
}

Graph complete_graph(int n) {
    if (n < 1) throw InvalidInputError("complete graph order must be at least 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return build_graph(n, edges, "K_" + std::to_string(n));
}

Graph edgeless_graph(int n) {
    if (n < 1) throw InvalidInputError("edgeless graph order must be at least 1");
    return build_graph(n, {}, "K~_" + std::to_string(n));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw InvalidInputError("star must have at least 1 leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return build_graph(leaves + 1, edges, "K_{1," + std::to_string(leaves) + "}");
}

Graph grid_graph(int rows, int cols) {
    auto [g, lab] = cartesian_product(path_graph(rows), path_graph(cols));
    g.name = "grid(" + std::to_string(rows) + "," + std::to_string(cols) + ")";
    return g;
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(i, i + 5);               // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return build_graph(10, edges, "Petersen");
}

Graph spider_graph(const std::vector<int>& leg_lengths) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : leg_lengths) {
        if (len < 1) throw InvalidInputError("spider leg length must be at least 1");
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(next, edges, "spider");
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInputError("tree order must be at least 1");
    if (n == 1) return build_graph(1, {}, "tree(1)");
    if (n == 2) return build_graph(2, {{0, 1}}, "tree(2)");

    // splitmix64 stream; avoids platform-dependent distribution code
    auto next_rand = [state = seed]() mutable {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };

    std::vector<int> prufer(static_cast<std::size_t>(n - 2));
    for (auto& x : prufer) x = static_cast<int>(next_rand() % static_cast<std::uint64_t>(n));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    VertexSet leaves(n);
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.add(v);
    for (int x : prufer) {
        int leaf = leaves.first();
        leaves.remove(leaf);
        edges.emplace_back(leaf, x);
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.add(x);
    }
    int a = leaves.first();
    leaves.remove(a);
    int b = leaves.first();
    edges.emplace_back(a, b);
    return build_graph(n, edges, "tree(" + std::to_string(n) + "," + std::to_string(seed) + ")");
}

std::optional<FrogSpec> recognize_frog(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    if (g.m != g.n) return std::nullopt; // connected + |E|=|V| <=> exactly one cycle
    if (max_degree(g) > 3) return std::nullopt;

    // Strip leaves to expose the unique cycle.
    std::vector<int> degree(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) stack.push_back(v);
    VertexSet on_cycle(g.n);
    for (int v = 0; v < g.n; ++v) on_cycle.add(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        on_cycle.remove(v);
        for (int u : g.adj[static_cast<std::size_t>(v)])
            if (on_cycle.contains(u) && --degree[static_cast<std::size_t>(u)] == 1)
                stack.push_back(u);
    }

    // Off-cycle parts must be simple paths: no branching outside the cycle.
    for (int v = 0; v < g.n; ++v)
        if (!on_cycle.contains(v) && g.degree(v) > 2) return std::nullopt;

    // Walk the cycle to get cyclic positions.
    const int c = on_cycle.size();
    if (c < 3) return std::nullopt;
    std::vector<int> walk;
    walk.reserve(static_cast<std::size_t>(c));
    int start = on_cycle.first();
    int prev = -1, cur = start;
    do {
        walk.push_back(cur);
        int nxt = -1;
        for (int u : g.adj[static_cast<std::size_t>(cur)])
            if (on_cycle.contains(u) && u != prev) {
                nxt = u;
                break;
            }
        prev = cur;
        cur = nxt;
    } while (cur != start && cur != -1);
    if (static_cast<int>(walk.size()) != c) return std::nullopt;

    std::vector<int> junctions;
    for (int v : walk)
        if (g.degree(v) == 3) junctions.push_back(v);
    if (junctions.size() > 2) return std::nullopt;

    auto cycle_position = [&](int v) {
        return static_cast<int>(std::find(walk.begin(), walk.end(), v) - walk.begin());
    };
    if (junctions.size() == 2) {
        int delta = std::abs(cycle_position(junctions[0]) - cycle_position(junctions[1]));
        int cycle_dist = std::min(delta, c - delta);
        if (cycle_dist != c / 2) return std::nullopt; // junctions must be antipodal
    }

    // Path order hanging at a junction: walk away from the cycle.
    auto hanging_order = [&](int junction) {
        int order = 1;
        int p = junction;
        int v = -1;
        for (int u : g.adj[static_cast<std::size_t>(junction)])
            if (!on_cycle.contains(u)) v = u;
        while (v != -1) {
            ++order;
            int nxt = -1;
            for (int u : g.adj[static_cast<std::size_t>(v)])
                if (u != p) nxt = u;
            p = v;
            v = nxt;
        }
        return order;
    };

    FrogSpec spec;
    spec.cycle_len = c;
    if (junctions.empty()) {
        spec.r = spec.s = 1;
        spec.junction_r = walk[0];
        spec.junction_s = walk[static_cast<std::size_t>(c / 2)];
    } else if (junctions.size() == 1) {
        spec.r = hanging_order(junctions[0]);
        spec.s = 1;
        spec.junction_r = junctions[0];
        int pos = cycle_position(junctions[0]);
        spec.junction_s = walk[static_cast<std::size_t>((pos + c / 2) % c)];
    } else {
        int r0 = hanging_order(junctions[0]);
        int r1 = hanging_order(junctions[1]);
        spec.r = std::max(r0, r1);
        spec.s = std::min(r0, r1);
        spec.junction_r = r0 >= r1 ? junctions[0] : junctions[1];
        spec.junction_s = r0 >= r1 ? junctions[1] : junctions[0];
    }
    return spec;
}

bool is_tree(const Graph& g) { return g.m == g.n - 1 && is_connected(g); }

int leaf_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) ++count;
    return count;
}

bool is_tree_with_three_leaves(const Graph& g) { return is_tree(g) && leaf_count(g) == 3; }

bool is_path_graph(const Graph& g) { return is_tree(g) && max_degree(g) <= 2; }

bool is_geodetic(const Graph& g) {
    VisibilityOracle vis(g);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (vis.count_geodesics(u, v) != 1) return false;
    return true;
}

namespace {

std::vector<std::string> tokenize_spec(const std::string& spec) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : spec) {
        if (ch == ':' || ch == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

int take_int(const std::vector<std::string>& tokens, std::size_t& pos, const std::string& family) {
    if (pos >= tokens.size())
        throw ParseError("graph spec: missing parameter for family '" + family + "'");
    const std::string& t = tokens[pos];
    std::size_t used = 0;
    long long value;
    try {
        value = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw ParseError("graph spec: expected a number, got '" + t + "'");
    }
    if (used != t.size()) throw ParseError("graph spec: expected a number, got '" + t + "'");
    ++pos;
    return static_cast<int>(value);
}

Graph parse_spec(const std::vector<std::string>& tokens, std::size_t& pos) {
    if (pos >= tokens.size()) throw ParseError("graph spec: empty spec");
    std::string family = tokens[pos++];
    try {
        if (family == "path") return path_graph(take_int(tokens, pos, family));
        if (family == "cycle") return cycle_graph(take_int(tokens, pos, family));
        if (family == "complete") return complete_graph(take_int(tokens, pos, family));
        if (family == "edgeless") return edgeless_graph(take_int(tokens, pos, family));
        if (family == "star") return star_graph(take_int(tokens, pos, family));
        if (family == "grid") {
            int r = take_int(tokens, pos, family);
            int c = take_int(tokens, pos, family);
            return grid_graph(r, c);
        }
        if (family == "petersen") return petersen_graph();
        if (family == "graph_h") return make_graph_h();
        if (family == "frog") {
            int c = take_int(tokens, pos, family);
            int r = take_int(tokens, pos, family);
            int s = take_int(tokens, pos, family);
            return make_frog(c, r, s);
        }
        if (family == "tree") {
            int n = take_int(tokens, pos, family);
            int seed = take_int(tokens, pos, family);
            return random_tree(n, static_cast<std::uint64_t>(seed));
        }
        if (family == "cartesian") {
            Graph a = parse_spec(tokens, pos);
            Graph b = parse_spec(tokens, pos);
            return cartesian_product(a, b).first;
        }
        if (family == "corona") {
            Graph a = parse_spec(tokens, pos);
            Graph b = parse_spec(tokens, pos);
            return corona(a, b);
        }
    } catch (const InvalidInputError& e) {
        throw ParseError("graph spec: " + std::string(e.what()));
    }
    throw ParseError("graph spec: unknown family '" + family + "'");
}

} // namespace

Graph from_spec(const std::string& spec) {
    auto tokens = tokenize_spec(spec);
    std::size_t pos = 0;
    Graph g = parse_spec(tokens, pos);
    if (pos != tokens.size()) throw ParseError("graph spec: trailing tokens in '" + spec + "'");
    return g;
}

std::vector<std::string> spec_families() {
    return {"path:n",    "cycle:n",         "complete:n",          "edgeless:n",
            "star:n",    "grid:r,s",        "petersen",            "graph_h",
            "frog:c,r,s", "tree:n,seed",    "cartesian:SPEC,SPEC", "corona:SPEC,SPEC"};
}

} // namespace mutvis
