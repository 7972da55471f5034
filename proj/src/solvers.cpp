#include "mutvis/solvers.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <mutex>
#include <numeric>
#include <thread>

namespace mutvis {

namespace {

using Clock = std::chrono::steady_clock;

// Feasibility policies for the downward-closed families. can_add(x, members, v)
// decides whether members + v stays feasible; x is the bit view of members and
// must not contain v on entry (it is restored before returning).

struct MvFeasibility {
    const VisibilityOracle& vis;

    bool can_add(VertexSet& x, const std::vector<int>& members, int v) const {
        const auto& d = vis.dist();
        // New pairs (u,v): blockers are the other members.
        for (int u : members)
            if (!vis.visible(x, u, v)) return false;
        // Established pairs can only lose visibility if v lies on one of
        // their geodesics; recheck exactly those.
        x.add(v);
        bool ok = true;
        for (std::size_t i = 0; i < members.size() && ok; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int a = members[i], b = members[j];
                if (d.at(a, v) + d.at(v, b) == d.at(a, b) && !vis.visible(x, a, b)) {
                    ok = false;
                    break;
                }
            }
        x.remove(v);
        return ok;
    }

    bool verify(const VertexSet& x) const { return vis.is_mv_set(x); }
};

struct IndependentMvFeasibility {
    const VisibilityOracle& vis;

    bool can_add(VertexSet& x, const std::vector<int>& members, int v) const {
        if (vis.graph().nbr[static_cast<std::size_t>(v)].intersects(x)) return false;
        return MvFeasibility{vis}.can_add(x, members, v);
    }

    bool verify(const VertexSet& x) const { return vis.is_independent_mv_set(x); }
};

struct IndependentFeasibility {
    const VisibilityOracle& vis;

    bool can_add(VertexSet& x, const std::vector<int>&, int v) const {
        return !vis.graph().nbr[static_cast<std::size_t>(v)].intersects(x);
    }

    bool verify(const VertexSet& x) const { return vis.is_independent_set(x); }
};

struct GpFeasibility {
    const VisibilityOracle& vis;

    bool can_add(VertexSet&, const std::vector<int>& members, int v) const {
        const auto& d = vis.dist();
        for (std::size_t i = 0; i < members.size(); ++i) {
            int u = members[i];
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                int w = members[j];
                if (d.at(u, v) + d.at(v, w) == d.at(u, w)) return false; // v between u,w
                if (d.at(v, u) + d.at(u, w) == d.at(v, w)) return false; // u between v,w
                if (d.at(v, w) + d.at(w, u) == d.at(v, u)) return false; // w between v,u
            }
        }
        return true;
    }

    bool verify(const VertexSet& x) const { return vis.is_gp_set(x); }
};

struct SearchShared {
    std::atomic<int> best_value{0};
    std::mutex witness_mutex;
    VertexSet best_witness;
    std::atomic<bool> timed_out{false};
    Clock::time_point deadline;
};

template <class Fam>
void dfs(const Fam& fam, const std::vector<int>& order, int pos, VertexSet& x,
         std::vector<int>& members, SearchShared& sh, std::uint64_t& nodes) {
    if ((++nodes & 1023u) == 0) {
        if (Clock::now() > sh.deadline) sh.timed_out.store(true, std::memory_order_relaxed);
        if (sh.timed_out.load(std::memory_order_relaxed)) return;
    }
    const int size = static_cast<int>(members.size());
    if (size > sh.best_value.load(std::memory_order_relaxed)) {
        std::lock_guard lock(sh.witness_mutex);
        if (size > sh.best_value.load(std::memory_order_relaxed)) {
            sh.best_witness = x;
            sh.best_value.store(size, std::memory_order_relaxed);
        }
    }
    const int n = static_cast<int>(order.size());
    if (pos == n) return;
    if (size + n - pos <= sh.best_value.load(std::memory_order_relaxed)) return;
    int v = order[static_cast<std::size_t>(pos)];
    if (fam.can_add(x, members, v)) {
        x.add(v);
        members.push_back(v);
        dfs(fam, order, pos + 1, x, members, sh, nodes);
        members.pop_back();
        x.remove(v);
        if (sh.timed_out.load(std::memory_order_relaxed)) return;
    }
    dfs(fam, order, pos + 1, x, members, sh, nodes);
}

// Canonical-witness / decision search: include-first DFS in ascending index
// order. The first set of the target size found this way is the one with the
// lexicographically smallest sorted index sequence.
template <class Fam>
bool find_set_of_size(const Fam& fam, int n, int from, int target, VertexSet& x,
                      std::vector<int>& members, std::uint64_t& nodes) {
    if (static_cast<int>(members.size()) == target) return true;
    if (from == n || static_cast<int>(members.size()) + n - from < target) return false;
    ++nodes;
    if (fam.can_add(x, members, from)) {
        x.add(from);
        members.push_back(from);
        if (find_set_of_size(fam, n, from + 1, target, x, members, nodes)) return true;
        members.pop_back();
        x.remove(from);
    }
    return find_set_of_size(fam, n, from + 1, target, x, members, nodes);
}

struct Task {
    std::vector<int> members;
    int pos = 0;
};

// Expands the top of the search tree breadth-first until there are enough
// independent subtrees to feed the workers.
template <class Fam>
std::vector<Task> make_tasks(const Fam& fam, const std::vector<int>& order, int n,
                             std::size_t want) {
    std::deque<Task> queue;
    queue.push_back({});
    while (queue.size() < want) {
        auto it = std::find_if(queue.begin(), queue.end(),
                               [&](const Task& t) { return t.pos < n; });
        if (it == queue.end()) break;
        Task t = std::move(*it);
        queue.erase(it);
        VertexSet x(n);
        for (int u : t.members) x.add(u);
        int v = order[static_cast<std::size_t>(t.pos)];
        if (fam.can_add(x, t.members, v)) {
            Task inc = t;
            inc.members.push_back(v);
            inc.pos = t.pos + 1;
            queue.push_back(std::move(inc));
        }
        t.pos += 1;
        queue.push_back(std::move(t));
    }
    return {queue.begin(), queue.end()};
}

std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

template <class Fam>
SolveResult solve_family(const VisibilityOracle& vis, const Fam& fam, const SolverOptions& opts) {
    const Graph& g = vis.graph();
    if (opts.vertex_cap > kHardVertexCap)
        throw CapExceededError("vertex cap " + std::to_string(opts.vertex_cap) +
                               " exceeds hard limit " + std::to_string(kHardVertexCap));
    if (g.n > opts.vertex_cap)
        throw CapExceededError("graph has " + std::to_string(g.n) +
                               " vertices, solver cap is " + std::to_string(opts.vertex_cap));
    if (!is_connected(g)) throw DisconnectedError("solver requires a connected graph");

    const auto started = Clock::now();
    SearchShared sh;
    sh.best_witness = VertexSet(g.n);
    sh.best_value.store(std::max(0, opts.initial_lower_bound));
    sh.deadline = started + opts.timeout;
    const auto order = branch_order(g);

    std::uint64_t nodes = 0;
    if (opts.workers <= 1) {
        VertexSet x(g.n);
        std::vector<int> members;
        dfs(fam, order, 0, x, members, sh, nodes);
    } else {
        auto tasks = make_tasks(fam, order, g.n, static_cast<std::size_t>(opts.workers) * 8);
        std::atomic<std::size_t> next{0};
        std::atomic<std::uint64_t> node_sum{0};
        auto body = [&] {
            std::uint64_t local = 0;
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) break;
                const Task& t = tasks[i];
                VertexSet x(g.n);
                std::vector<int> members = t.members;
                for (int u : members) x.add(u);
                dfs(fam, order, t.pos, x, members, sh, local);
            }
            node_sum.fetch_add(local);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < opts.workers; ++w) pool.emplace_back(body);
        for (auto& th : pool) th.join();
        nodes = node_sum.load();
    }

    SolveResult result;
    result.nodes_explored = nodes;
    result.complete = !sh.timed_out.load();
    result.value = sh.best_value.load();
    result.witness = sh.best_witness;
    if (!result.complete) result.value = result.witness.size(); // only the certified incumbent

    if (result.complete) {
        // Deterministic canonical witness for the certified optimum.
        VertexSet x(g.n);
        std::vector<int> members;
        std::uint64_t phase2_nodes = 0;
        if (!find_set_of_size(fam, g.n, 0, result.value, x, members, phase2_nodes))
            throw Error("internal error: optimal value has no witness");
        result.nodes_explored += phase2_nodes;
        result.witness = x;
    }
    if (!fam.verify(result.witness) || result.witness.size() != result.value)
        throw Error("internal error: witness failed verification");
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started);
    return result;
}

} // namespace

SolveResult solve_mu(const VisibilityOracle& vis, const SolverOptions& opts) {
    return solve_family(vis, MvFeasibility{vis}, opts);
}

SolveResult solve_mu_i(const VisibilityOracle& vis, const SolverOptions& opts) {
    return solve_family(vis, IndependentMvFeasibility{vis}, opts);
}

SolveResult solve_alpha(const VisibilityOracle& vis, const SolverOptions& opts) {
    return solve_family(vis, IndependentFeasibility{vis}, opts);
}

SolveResult solve_gp(const VisibilityOracle& vis, const SolverOptions& opts) {
    return solve_family(vis, GpFeasibility{vis}, opts);
}

namespace {

VisibilityOracle make_oracle_checked(const Graph& g, const SolverOptions& opts) {
    if (g.n > opts.vertex_cap)
        throw CapExceededError("graph has " + std::to_string(g.n) +
                               " vertices, solver cap is " + std::to_string(opts.vertex_cap));
    if (!is_connected(g)) throw DisconnectedError("solver requires a connected graph");
    return VisibilityOracle(g);
}

} // namespace

SolveResult solve_mu(const Graph& g, const SolverOptions& opts) {
    return solve_mu(make_oracle_checked(g, opts), opts);
}

SolveResult solve_mu_i(const Graph& g, const SolverOptions& opts) {
    return solve_mu_i(make_oracle_checked(g, opts), opts);
}

SolveResult solve_alpha(const Graph& g, const SolverOptions& opts) {
    return solve_alpha(make_oracle_checked(g, opts), opts);
}

SolveResult solve_gp(const Graph& g, const SolverOptions& opts) {
    return solve_gp(make_oracle_checked(g, opts), opts);
}

bool has_mv_set_of_size(const VisibilityOracle& vis, int k) {
    if (k <= 0) return true;
    if (k > vis.graph().n) return false;
    VertexSet x(vis.graph().n);
    std::vector<int> members;
    std::uint64_t nodes = 0;
    return find_set_of_size(MvFeasibility{vis}, vis.graph().n, 0, k, x, members, nodes);
}

bool has_independent_mv_set_of_size(const VisibilityOracle& vis, int k) {
    if (k <= 0) return true;
    if (k > vis.graph().n) return false;
    VertexSet x(vis.graph().n);
    std::vector<int> members;
    std::uint64_t nodes = 0;
    return find_set_of_size(IndependentMvFeasibility{vis}, vis.graph().n, 0, k, x, members, nodes);
}

bool has_gp_set_of_size(const VisibilityOracle& vis, int k) {
    if (k <= 0) return true;
    if (k > vis.graph().n) return false;
    VertexSet x(vis.graph().n);
    std::vector<int> members;
    std::uint64_t nodes = 0;
    return find_set_of_size(GpFeasibility{vis}, vis.graph().n, 0, k, x, members, nodes);
}

bool contains_subgraph_h(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        if (g.degree(u) < 3) continue;
        for (int v : g.adj[static_cast<std::size_t>(u)]) {
            if (v <= u || g.degree(v) < 3) continue;
            VertexSet reach = g.nbr[static_cast<std::size_t>(u)];
            reach |= g.nbr[static_cast<std::size_t>(v)];
            reach.remove(u);
            reach.remove(v);
            if (reach.size() >= 4) return true;
        }
    }
    return false;
}

BoundsReport bounds_mu(const Graph& g) {
    BoundsReport r;
    r.upper = g.n;
    r.rules.push_back("upper:order=" + std::to_string(g.n));

    int lower = std::min(g.n, 2); // a single vertex, or any adjacent pair
    r.rules.push_back("lower:trivial=" + std::to_string(lower));
    int delta = max_degree(g);
    if (delta > lower) {
        lower = delta;
        r.rules.push_back("lower:max_degree=" + std::to_string(delta));
    }
    if (girth(g).has_value() && lower < 3) {
        lower = 3; // a shortest cycle is isometric
        r.rules.push_back("lower:isometric_cycle=3");
    }
    if (is_triangle_free(g) && contains_subgraph_h(g) && lower < 4) {
        lower = 4;
        r.rules.push_back("lower:h_subgraph=4");
    }
    r.lower = lower;
    return r;
}

} // namespace mutvis
