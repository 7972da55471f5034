#include "mutvis/theorems.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

#include "mutvis/constructions.hpp"
#include "mutvis/graph_io.hpp"
#include "mutvis/product.hpp"
#include "mutvis/solvers.hpp"
#include "mutvis/visibility.hpp"
#include "mutvis/zarankiewicz.hpp"

namespace mutvis {

namespace {

using Clock = std::chrono::steady_clock;

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t k) { return next() % k; }
};

struct TimeBudgetExceeded {
    long long instances_done = 0;
};

struct CheckContext {
    CheckOptions opts;
    Clock::time_point deadline;

    bool expired() const { return Clock::now() > deadline; }

    SolverOptions solver_opts(int workers = 1) const {
        SolverOptions so;
        so.workers = workers;
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        so.timeout = std::max(left, std::chrono::milliseconds{1});
        return so;
    }
};

std::string instance_id(const Graph& g) {
    if (!g.name.empty()) return g.name;
    return "g6:" + to_graph6(g);
}

SolveResult must_complete(SolveResult r, long long done) {
    if (!r.complete) throw TimeBudgetExceeded{done};
    return r;
}

// ----- fast labeled enumeration of connected graphs on n <= 7 vertices

struct MaskEnumerator {
    int n;
    std::array<std::pair<int, int>, 21> pairs{};
    int pair_count = 0;

    explicit MaskEnumerator(int order) : n(order) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs[static_cast<std::size_t>(pair_count++)] = {i, j};
    }

    std::uint64_t total() const { return std::uint64_t{1} << pair_count; }

    // Decodes mask into adjacency rows; returns false for disconnected (or,
    // when tf_only, non-triangle-free) graphs.
    bool accept(std::uint64_t mask, bool tf_only, std::array<std::uint32_t, 7>& rows) const {
        rows.fill(0);
        std::uint64_t bits = mask;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            auto [i, j] = pairs[static_cast<std::size_t>(b)];
            rows[static_cast<std::size_t>(i)] |= 1u << j;
            rows[static_cast<std::size_t>(j)] |= 1u << i;
        }
        std::uint32_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint32_t next = 0;
            std::uint32_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= rows[static_cast<std::size_t>(v)];
            }
            frontier = next & ~seen;
            seen |= frontier;
        }
        if (seen != (1u << n) - 1) return false;
        if (tf_only) {
            std::uint64_t eb = mask;
            while (eb) {
                int b = std::countr_zero(eb);
                eb &= eb - 1;
                auto [i, j] = pairs[static_cast<std::size_t>(b)];
                if (rows[static_cast<std::size_t>(i)] & rows[static_cast<std::size_t>(j)]) return false;
            }
        }
        return true;
    }

    Graph to_graph(std::uint64_t mask) const {
        std::vector<std::pair<int, int>> edges;
        std::uint64_t bits = mask;
        while (bits) {
            int b = std::countr_zero(bits);
            bits &= bits - 1;
            edges.push_back(pairs[static_cast<std::size_t>(b)]);
        }
        return build_graph(n, edges);
    }
};

// Scans all connected graphs on the given orders with deterministic parallel
// chunking: contiguous mask ranges per worker, failures merged in range order.
// per_graph returns false for not-applicable instances, which are not counted.
void scan_connected(const std::vector<int>& orders, bool tf_only, CheckContext& cx,
                    CheckReport& rep,
                    const std::function<bool(const Graph&, std::vector<CheckFailure>&)>& per_graph) {
    for (int n : orders) {
        MaskEnumerator en(n);
        const std::uint64_t total = en.total();
        const int workers = std::max(1, cx.opts.workers);
        std::vector<std::vector<CheckFailure>> fails(static_cast<std::size_t>(workers));
        std::vector<long long> counts(static_cast<std::size_t>(workers), 0);
        std::atomic<bool> abort{false};
        std::mutex error_mutex;
        std::string worker_error;

        auto body = [&](int w) {
            const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
            const std::uint64_t hi =
                total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
            std::array<std::uint32_t, 7> rows{};
            long long local = 0;
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if ((mask & 1023u) == 0 && (abort.load(std::memory_order_relaxed) || cx.expired())) {
                    abort.store(true, std::memory_order_relaxed);
                    return;
                }
                if (!en.accept(mask, tf_only, rows)) continue;
                Graph g = en.to_graph(mask);
                try {
                    if (per_graph(g, fails[static_cast<std::size_t>(w)])) ++local;
                } catch (const TimeBudgetExceeded&) {
                    abort.store(true, std::memory_order_relaxed);
                    return;
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    if (worker_error.empty())
                        worker_error = std::string(e.what()) + " on " + instance_id(g);
                    abort.store(true, std::memory_order_relaxed);
                    return;
                }
            }
            counts[static_cast<std::size_t>(w)] = local;
        };

        if (workers == 1) {
            body(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
            for (auto& th : pool) th.join();
        }
        for (int w = 0; w < workers; ++w) rep.instances_checked += counts[static_cast<std::size_t>(w)];
        for (auto& f : fails)
            rep.failures.insert(rep.failures.end(), f.begin(), f.end());
        if (!worker_error.empty()) throw Error("checker failed: " + worker_error);
        if (abort.load()) throw TimeBudgetExceeded{rep.instances_checked};
    }
}

void expect(CheckReport& rep, const std::string& instance, bool ok, const std::string& expected,
            const std::string& got) {
    ++rep.instances_checked;
    if (!ok) rep.failures.push_back({instance, expected, got});
}

void expect_into(std::vector<CheckFailure>& out, const std::string& instance, bool ok,
                 const std::string& expected, const std::string& got) {
    if (!ok) out.push_back({instance, expected, got});
}

// ----- individual claim checkers

void check_eq1_sandwich(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? std::min(cx.opts.max_n, 7) : 6;
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    scan_connected(orders, false, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        VisibilityOracle vis(g);
        auto so = cx.solver_opts();
        int mu = must_complete(solve_mu(vis, so), rep.instances_checked).value;
        int mui = must_complete(solve_mu_i(vis, so), rep.instances_checked).value;
        int alpha = must_complete(solve_alpha(vis, so), rep.instances_checked).value;
        expect_into(out, instance_id(g), mui <= std::min(mu, alpha),
                    "mu_i <= min(mu, alpha)",
                    "mu_i=" + std::to_string(mui) + " mu=" + std::to_string(mu) +
                        " alpha=" + std::to_string(alpha));
        return true;
    });
}

void check_lemma_diam3(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? std::min(cx.opts.max_n, 7) : 6;
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    scan_connected(orders, false, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        auto d = all_pairs_distances(g);
        if (d.diameter() > 3) return false; // not applicable
        VisibilityOracle vis(g, std::move(d));
        auto so = cx.solver_opts();
        int mui = must_complete(solve_mu_i(vis, so), rep.instances_checked).value;
        int alpha = must_complete(solve_alpha(vis, so), rep.instances_checked).value;
        expect_into(out, instance_id(g), mui == alpha, "mu_i == alpha",
                    "mu_i=" + std::to_string(mui) + " alpha=" + std::to_string(alpha));
        return true;
    });
    // The diameter-4 non-example showing the hypothesis matters.
    Graph p5 = path_graph(5);
    auto so = cx.solver_opts();
    int mui = must_complete(solve_mu_i(p5, so), rep.instances_checked).value;
    int alpha = must_complete(solve_alpha(p5, so), rep.instances_checked).value;
    expect(rep, "P_5 non-example", mui == 2 && alpha == 3, "mu_i=2 alpha=3",
           "mu_i=" + std::to_string(mui) + " alpha=" + std::to_string(alpha));
}

void check_eq2_trees(CheckContext& cx, CheckReport& rep) {
    int samples = cx.opts.samples > 0 ? cx.opts.samples : 25;
    int max_n = cx.opts.max_n > 0 ? cx.opts.max_n : 12;
    SplitMix rng{cx.opts.seed * 0x100000001b3ULL + 17};
    for (int k = 0; k < samples; ++k) {
        if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
        int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_n - 2))));
        Graph t = random_tree(n, rng.next());
        auto so = cx.solver_opts();
        int mu = must_complete(solve_mu(t, so), rep.instances_checked).value;
        int mui = must_complete(solve_mu_i(t, so), rep.instances_checked).value;
        int leaves = leaf_count(t);
        expect(rep, instance_id(t) + " (" + to_graph6(t) + ")", mu == leaves && mui == leaves,
               "mu = leaves = mu_i = " + std::to_string(leaves),
               "mu=" + std::to_string(mu) + " mu_i=" + std::to_string(mui));
    }
}

void check_prop_corona(CheckContext& cx, CheckReport& rep) {
    const std::vector<Graph> gs = {path_graph(2), path_graph(3), cycle_graph(4)};
    const std::vector<Graph> hs = {complete_graph(1), complete_graph(2), path_graph(3),
                                   edgeless_graph(2), edgeless_graph(3)};
    auto so = cx.solver_opts();
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            Graph c = corona(g, h);
            int mu = must_complete(solve_mu(c, so), rep.instances_checked).value;
            expect(rep, g.name + " o " + h.name, mu == g.n * h.n,
                   "mu = " + std::to_string(g.n * h.n), "mu=" + std::to_string(mu));
        }
        for (int k = 1; k <= 3; ++k) {
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            Graph c = corona(g, edgeless_graph(k));
            int mu = must_complete(solve_mu(c, so), rep.instances_checked).value;
            int mui = must_complete(solve_mu_i(c, so), rep.instances_checked).value;
            expect(rep, g.name + " o edgeless_" + std::to_string(k), mu == k * g.n && mui == k * g.n,
                   "mu = mu_i = " + std::to_string(k * g.n),
                   "mu=" + std::to_string(mu) + " mu_i=" + std::to_string(mui));
        }
    }
}

// Certifies a lower-bound seed before using it: the candidate must actually be
// a mutual-visibility set of the product.
int certified_seed(const VisibilityOracle& vis, const VertexSet& candidate) {
    return vis.is_mv_set(candidate) ? candidate.size() : 0;
}

VertexSet product_of_sets(const ProductLabeling& lab, const VertexSet& xg, const VertexSet& xh) {
    VertexSet x(lab.product_order());
    for (int g : xg)
        for (int h : xh) x.add(lab.forward(g, h));
    return x;
}

void check_thm_cp_bounds(CheckContext& cx, CheckReport& rep) {
    std::vector<Graph> factors = {path_graph(3),  path_graph(4),     cycle_graph(4),
                                  cycle_graph(6), complete_graph(3), star_graph(3)};
    int cap = cx.opts.max_n > 0 ? cx.opts.max_n : 24;
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (std::size_t b = a; b < factors.size(); ++b) {
            const Graph& g = factors[a];
            const Graph& h = factors[b];
            if (g.n * h.n > cap) continue;
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            auto so = cx.solver_opts();
            auto mu_g = must_complete(solve_mu(g, so), rep.instances_checked);
            auto mu_h = must_complete(solve_mu(h, so), rep.instances_checked);
            auto mui_g = must_complete(solve_mu_i(g, so), rep.instances_checked);
            auto mui_h = must_complete(solve_mu_i(h, so), rep.instances_checked);

            auto [prod, lab] = cartesian_product(g, h);
            VisibilityOracle vis(prod);
            int lower = std::max(mu_g.value * mui_h.value, mu_h.value * mui_g.value);
            int upper = std::min(mu_g.value * h.n, mu_h.value * g.n);
            auto seed_a = product_of_sets(lab, mu_g.witness, mui_h.witness);
            auto seed_b = product_of_sets(lab, mui_g.witness, mu_h.witness);
            auto sp = cx.solver_opts(cx.opts.workers);
            sp.initial_lower_bound =
                std::max(certified_seed(vis, seed_a), certified_seed(vis, seed_b));
            int mu_prod = must_complete(solve_mu(vis, sp), rep.instances_checked).value;
            expect(rep, g.name + " x " + h.name, lower <= mu_prod && mu_prod <= upper,
                   std::to_string(lower) + " <= mu <= " + std::to_string(upper),
                   "mu=" + std::to_string(mu_prod));
        }
}

void check_cor_trees_lower(CheckContext& cx, CheckReport& rep) {
    std::vector<Graph> trees = {path_graph(3), path_graph(4), path_graph(5), star_graph(3),
                                spider_graph({1, 1, 2})};
    int cap = cx.opts.max_n > 0 ? cx.opts.max_n : 20;
    for (std::size_t a = 0; a < trees.size(); ++a)
        for (std::size_t b = a; b < trees.size(); ++b) {
            const Graph& t1 = trees[a];
            const Graph& t2 = trees[b];
            if (t1.n * t2.n > cap) continue;
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            auto so = cx.solver_opts();
            auto mu1 = must_complete(solve_mu(t1, so), rep.instances_checked);
            auto mu2 = must_complete(solve_mu_i(t2, so), rep.instances_checked);
            auto [prod, lab] = cartesian_product(t1, t2);
            VisibilityOracle vis(prod);
            auto sp = cx.solver_opts(cx.opts.workers);
            sp.initial_lower_bound =
                certified_seed(vis, product_of_sets(lab, mu1.witness, mu2.witness));
            int mu_prod = must_complete(solve_mu(vis, sp), rep.instances_checked).value;
            int mu_t2 = must_complete(solve_mu(t2, so), rep.instances_checked).value;
            expect(rep, t1.name + " x " + t2.name, mu_prod >= mu1.value * mu_t2,
                   "mu(T1 x T2) >= " + std::to_string(mu1.value * mu_t2),
                   "mu=" + std::to_string(mu_prod));
        }
}

void check_thm_kkg(CheckContext& cx, CheckReport& rep) {
    std::vector<Graph> bases = {cycle_graph(6), cycle_graph(7), path_graph(4), star_graph(3),
                                spider_graph({1, 1, 2})};
    int cap = cx.opts.max_n > 0 ? cx.opts.max_n : 24;
    for (const auto& g : bases) {
        auto so = cx.solver_opts();
        auto mu = must_complete(solve_mu(g, so), rep.instances_checked);
        auto mui = must_complete(solve_mu_i(g, so), rep.instances_checked);
        expect(rep, g.name + " precondition", mu.value == mui.value, "mu == mu_i",
               "mu=" + std::to_string(mu.value) + " mu_i=" + std::to_string(mui.value));
        if (mu.value != mui.value) continue;
        for (int k = 2; k <= 3; ++k) {
            if (k * g.n > cap) continue;
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            auto [prod, lab] = cartesian_product(complete_graph(k), g);
            VisibilityOracle vis(prod);
            VertexSet all_k(k);
            for (int i = 0; i < k; ++i) all_k.add(i);
            auto sp = cx.solver_opts(cx.opts.workers);
            sp.initial_lower_bound = certified_seed(vis, product_of_sets(lab, all_k, mui.witness));
            int mu_prod = must_complete(solve_mu(vis, sp), rep.instances_checked).value;
            expect(rep, "K_" + std::to_string(k) + " x " + g.name, mu_prod == k * mu.value,
                   "mu = " + std::to_string(k * mu.value), "mu=" + std::to_string(mu_prod));
        }
    }
}

bool subset_meets_every_induced_c4(const VertexSet& x,
                                   const std::vector<std::array<int, 4>>& cycles) {
    for (const auto& c : cycles) {
        int hit = 0;
        for (int v : c) hit += x.contains(v) ? 1 : 0;
        if (hit > 3) return false;
    }
    return true;
}

// Vertex quadruples inducing a 4-cycle: every member has induced degree 2.
std::vector<std::array<int, 4>> induced_four_cycles(const Graph& g) {
    std::vector<std::array<int, 4>> cycles;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                for (int d = c + 1; d < g.n; ++d) {
                    std::array<int, 4> q{a, b, c, d};
                    bool ok = true;
                    for (int i = 0; i < 4 && ok; ++i) {
                        int deg = 0;
                        for (int j = 0; j < 4; ++j)
                            if (i != j && g.has_edge(q[static_cast<std::size_t>(i)],
                                                     q[static_cast<std::size_t>(j)]))
                                ++deg;
                        if (deg != 2) ok = false;
                    }
                    if (ok) cycles.push_back(q);
                }
    return cycles;
}

void check_lemma_hamming(CheckContext& cx, CheckReport& rep) {
    const std::vector<std::pair<int, int>> sizes = {{2, 2}, {2, 3}, {3, 3}};
    for (auto [r, s] : sizes) {
        auto [prod, lab] = cartesian_product(complete_graph(r), complete_graph(s));
        VisibilityOracle vis(prod);
        auto cycles = induced_four_cycles(prod);
        const std::uint64_t total = std::uint64_t{1} << prod.n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if ((mask & 255u) == 0 && cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            VertexSet x(prod.n);
            for (int v = 0; v < prod.n; ++v)
                if ((mask >> v) & 1) x.add(v);
            bool mv = vis.is_mv_set(x);
            bool cap3 = subset_meets_every_induced_c4(x, cycles);
            ++rep.instances_checked;
            if (mv != cap3)
                rep.failures.push_back({"K_" + std::to_string(r) + " x K_" + std::to_string(s) +
                                            " X=" + x.to_string(),
                                        "mv <=> every induced C4 meets <= 3",
                                        std::string("mv=") + (mv ? "true" : "false") +
                                            " cap3=" + (cap3 ? "true" : "false")});
        }
    }
}

void check_cor_zarankiewicz(CheckContext& cx, CheckReport& rep) {
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= 4; ++n) {
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            ZOptions zo;
            auto z = z_exact({m, n, 2, 2}, zo);
            if (!z.complete) throw TimeBudgetExceeded{rep.instances_checked};
            auto [prod, lab] = cartesian_product(complete_graph(m), complete_graph(n));
            VisibilityOracle vis(prod);
            auto sp = cx.solver_opts(cx.opts.workers);
            sp.initial_lower_bound = certified_seed(vis, matrix_to_mv_set(z.witness, lab));
            auto mu = must_complete(solve_mu(vis, sp), rep.instances_checked);
            bool values_equal = mu.value == z.value;
            // Cross-validate both witnesses through the bijection.
            bool z_witness_mv = vis.is_mv_set(matrix_to_mv_set(z.witness, lab));
            bool mu_witness_22free = !has_all_ones_block(mv_set_to_matrix(mu.witness, lab), 2, 2);
            expect(rep, "K_" + std::to_string(m) + " x K_" + std::to_string(n),
                   values_equal && z_witness_mv && mu_witness_22free,
                   "mu = z and witnesses transfer",
                   "mu=" + std::to_string(mu.value) + " z=" + std::to_string(z.value) +
                       " z_witness_mv=" + (z_witness_mv ? "true" : "false") +
                       " mu_witness_22free=" + (mu_witness_22free ? "true" : "false"));
        }
}

void check_lemma_isometric(CheckContext& cx, CheckReport& rep) {
    auto so = cx.solver_opts();
    auto check_pair = [&](const Graph& host, const VertexSet& w, const std::string& label) {
        auto [sub, back] = induced_subgraph(host, w);
        int mu_host = must_complete(solve_mu(host, so), rep.instances_checked).value;
        int mu_sub = must_complete(solve_mu(sub, so), rep.instances_checked).value;
        expect(rep, label, mu_host >= mu_sub,
               "mu(G) >= mu(G') = " + std::to_string(mu_sub), "mu(G)=" + std::to_string(mu_host));
    };

    // Fixed isometric instances: frog cycles and product layers.
    {
        Graph frog = make_frog(6, 3, 2);
        VertexSet cyc(frog.n);
        for (int v = 0; v < 6; ++v) cyc.add(v);
        if (!is_isometric_subgraph(frog, cyc)) {
            rep.failures.push_back({"frog(6,3,2) cycle", "cycle is isometric", "not isometric"});
            ++rep.instances_checked;
        } else {
            check_pair(frog, cyc, "frog(6,3,2) cycle");
        }
    }
    {
        auto [prod, lab] = cartesian_product(cycle_graph(4), path_graph(3));
        VertexSet layer = lab.left_layer(1);
        if (!is_isometric_subgraph(prod, layer)) {
            rep.failures.push_back({"C_4 x P_3 layer", "layer is isometric", "not isometric"});
            ++rep.instances_checked;
        } else {
            check_pair(prod, layer, "C_4 x P_3 layer");
        }
    }

    // Sampled isometric induced subgraphs of random connected graphs.
    int samples = cx.opts.samples > 0 ? cx.opts.samples : 30;
    SplitMix rng{cx.opts.seed * 0x9e3779b97f4a7c15ULL + 3};
    int found = 0;
    int attempts = 0;
    while (found < samples && attempts < samples * 60) {
        if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
        ++attempts;
        int n = 5 + static_cast<int>(rng.below(5));
        Graph g = random_connected_graph(n, rng.next());
        VertexSet w(g.n);
        for (int v = 0; v < g.n; ++v)
            if (rng.below(100) < 60) w.add(v);
        if (w.size() < 2 || w.size() == g.n) continue;
        auto [sub, back] = induced_subgraph(g, w);
        if (!is_connected(sub)) continue;
        if (!is_isometric_subgraph(g, w)) continue;
        check_pair(g, w, "g6:" + to_graph6(g) + " W=" + w.to_string());
        ++found;
    }
}

void check_lemma_delta(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? std::min(cx.opts.max_n, 7) : 6;
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    scan_connected(orders, false, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        VisibilityOracle vis(g);
        int delta = max_degree(g);
        // mu >= Delta iff an MV set of size Delta exists (downward closure).
        expect_into(out, instance_id(g), has_mv_set_of_size(vis, delta),
                    "mu >= Delta = " + std::to_string(delta), "no MV set of that size");
        return true;
    });
}

void check_lemma_h(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? cx.opts.max_n : 8;
    std::vector<int> orders;
    for (int n = 6; n <= std::min(max_n, 7); ++n) orders.push_back(n);
    scan_connected(orders, true, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        if (!contains_subgraph_h(g)) return false; // not applicable
        VisibilityOracle vis(g);
        expect_into(out, instance_id(g), has_mv_set_of_size(vis, 4), "mu >= 4",
                    "no MV set of size 4");
        return true;
    });

    if (max_n >= 8) {
        // Seeded samples at n = 8: rejection-sample triangle-free connected
        // hosts that contain H.
        int samples = cx.opts.samples > 0 ? cx.opts.samples : 40;
        SplitMix rng{cx.opts.seed + 99};
        int found = 0;
        int attempts = 0;
        while (found < samples && attempts < samples * 400) {
            if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
            ++attempts;
            Graph g = random_connected_graph(8, rng.next(), 120);
            if (!is_triangle_free(g) || !contains_subgraph_h(g)) continue;
            VisibilityOracle vis(g);
            expect(rep, "g6:" + to_graph6(g), has_mv_set_of_size(vis, 4), "mu >= 4",
                   "no MV set of size 4");
            ++found;
        }
    }
}

void check_thm_mu3(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? std::min(cx.opts.max_n, 7) : 7;
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    scan_connected(orders, true, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        VisibilityOracle vis(g);
        bool mu_is_3 = has_mv_set_of_size(vis, 3) && !has_mv_set_of_size(vis, 4);
        bool structural = is_tree_with_three_leaves(g) || recognize_frog(g).has_value();
        expect_into(out, instance_id(g), mu_is_3 == structural,
                    "mu==3 <=> tree with 3 leaves or frog",
                    std::string("mu3=") + (mu_is_3 ? "true" : "false") +
                        " structural=" + (structural ? "true" : "false"));
        return true;
    });
}

void check_path_k1_chars(CheckContext& cx, CheckReport& rep) {
    int max_n = cx.opts.max_n > 0 ? std::min(cx.opts.max_n, 7) : 7;
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    scan_connected(orders, false, cx, rep, [&](const Graph& g, std::vector<CheckFailure>& out) {
        VisibilityOracle vis(g);
        bool has2 = has_mv_set_of_size(vis, 2);
        bool has3 = has_mv_set_of_size(vis, 3);
        bool mu_is_1 = !has2;
        bool mu_is_2 = has2 && !has3;
        bool is_k1 = g.n == 1;
        bool is_path = is_path_graph(g) && g.n >= 2; // P_1 = K_1 belongs to the mu = 1 class
        expect_into(out, instance_id(g), mu_is_1 == is_k1, "mu==1 <=> K_1",
                    std::string("mu1=") + (mu_is_1 ? "true" : "false"));
        expect_into(out, instance_id(g), mu_is_2 == is_path, "mu==2 <=> path",
                    std::string("mu2=") + (mu_is_2 ? "true" : "false") +
                        " path=" + (is_path ? "true" : "false"));
        if (g.n <= 5) {
            // Defense in depth at small orders: the full solver must agree.
            int mu = must_complete(solve_mu(vis, cx.solver_opts()), rep.instances_checked).value;
            expect_into(out, instance_id(g),
                        (mu == 1) == mu_is_1 && (mu == 2) == mu_is_2 && (mu >= 3) == has3,
                        "solver agrees with size decisions", "mu=" + std::to_string(mu));
        }
        return true;
    });
}

void check_remark_prs(CheckContext& cx, CheckReport& rep) {
    for (auto [r, s] : std::vector<std::pair<int, int>>{{4, 4}, {4, 5}}) {
        if (cx.expired()) throw TimeBudgetExceeded{rep.instances_checked};
        auto [prod, lab] = cartesian_product(path_graph(r), path_graph(s));
        auto sp = cx.solver_opts(cx.opts.workers);
        int mu = must_complete(solve_mu(prod, sp), rep.instances_checked).value;
        int want = 2 * std::min(r, s);
        expect(rep, "P_" + std::to_string(r) + " x P_" + std::to_string(s), mu == want,
               "mu = " + std::to_string(want), "mu=" + std::to_string(mu));
    }
}

struct Claim {
    std::string id;
    std::string summary;
    void (*run)(CheckContext&, CheckReport&);
};

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = {
        {"eq1_sandwich", "mu_i <= min(mu, alpha) on all connected graphs", check_eq1_sandwich},
        {"lemma_diam3", "diam <= 3 implies mu_i = alpha; P_5 non-example", check_lemma_diam3},
        {"eq2_trees", "mu(T) = leaf count = mu_i(T) on random trees", check_eq2_trees},
        {"prop_corona", "mu(G o H) = n(G) n(H); mu_i(G o edgeless_k) = k n(G)", check_prop_corona},
        {"thm_cp_bounds", "product sandwich: max(mu mu_i) <= mu(GxH) <= min(mu n)",
         check_thm_cp_bounds},
        {"cor_trees_lower", "mu(T1 x T2) >= mu(T1) mu(T2) for trees", check_cor_trees_lower},
        {"thm_kkg", "mu = mu_i implies mu(K_k x G) = k mu(G)", check_thm_kkg},
        {"lemma_hamming", "X MV in K_r x K_s iff every induced C4 meets <= 3 vertices",
         check_lemma_hamming},
        {"cor_zarankiewicz", "mu(K_m x K_n) = z(m,n;2,2) with witness transfer",
         check_cor_zarankiewicz},
        {"lemma_isometric", "mu(G) >= mu(G') for isometric subgraphs G'", check_lemma_isometric},
        {"lemma_delta", "mu(G) >= max degree", check_lemma_delta},
        {"lemma_h", "triangle-free G containing H has mu >= 4", check_lemma_h},
        {"thm_mu3", "triangle-free: mu = 3 iff tree with 3 leaves or frog", check_thm_mu3},
        {"path_k1_chars", "mu = 1 iff K_1; mu = 2 iff path", check_path_k1_chars},
        {"remark_prs", "mu(P_r x P_s) = 2 min(r,s) at (4,4) and (4,5)", check_remark_prs},
    };
    return claims;
}

} // namespace

std::vector<std::string> all_claim_ids() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

bool is_claim_id(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return true;
    return false;
}

std::string claim_summary(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return c.summary;
    throw InvalidInputError("unknown claim id: " + id);
}

CheckReport check(const std::string& claim_id, const CheckOptions& opts) {
    const Claim* claim = nullptr;
    for (const auto& c : registry())
        if (c.id == claim_id) claim = &c;
    if (!claim) throw InvalidInputError("unknown claim id: " + claim_id);

    CheckReport rep;
    rep.claim_id = claim_id;
    const auto start = Clock::now();
    CheckContext cx{opts, start + opts.timeout};
    try {
        claim->run(cx, rep);
        if (!rep.failures.empty())
            rep.status = CheckStatus::fail;
        else if (rep.instances_checked > 0)
            rep.status = CheckStatus::pass;
        else {
            rep.status = CheckStatus::skipped;
            rep.skip_reason = "no instances within scale parameters";
        }
    } catch (const TimeBudgetExceeded& t) {
        rep.status = CheckStatus::skipped;
        rep.skip_reason =
            "time budget exceeded after " + std::to_string(t.instances_done) + " instances";
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return rep;
}

std::vector<CheckReport> check_all(const CheckOptions& opts) {
    std::vector<CheckReport> reports;
    for (const auto& c : registry()) reports.push_back(check(c.id, opts));
    return reports;
}

void enumerate_connected_graphs(int n, bool triangle_free_only,
                                const std::function<void(const Graph&, std::uint64_t)>& fn,
                                bool dedup_by_fingerprint) {
    if (n < 1 || n > 7)
        throw CapExceededError("labeled enumeration supports 1 <= n <= 7, got " +
                               std::to_string(n));
    MaskEnumerator en(n);
    std::array<std::uint32_t, 7> rows{};
    std::set<std::vector<long long>> seen;
    for (std::uint64_t mask = 0; mask < en.total(); ++mask) {
        if (!en.accept(mask, triangle_free_only, rows)) continue;
        Graph g = en.to_graph(mask);
        if (dedup_by_fingerprint && !seen.insert(fingerprint(g)).second) continue;
        fn(g, mask);
    }
}

Graph random_connected_graph(int n, std::uint64_t seed, int extra_edge_permille) {
    Graph tree = random_tree(n, seed ^ 0x5bf03635ULL);
    SplitMix rng{seed * 0x2545F4914F6CDD1DULL + 12345};
    auto edges = tree.edges();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (tree.has_edge(u, v)) continue;
            if (rng.below(1000) < static_cast<std::uint64_t>(extra_edge_permille))
                edges.emplace_back(u, v);
        }
    return build_graph(n, edges);
}

nlohmann::json to_json(const CheckReport& report, bool stable_output) {
    nlohmann::json j;
    j["claim_id"] = report.claim_id;
    j["instances_checked"] = report.instances_checked;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : report.failures)
        j["failures"].push_back({{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}});
    switch (report.status) {
        case CheckStatus::pass: j["status"] = "pass"; break;
        case CheckStatus::fail: j["status"] = "fail"; break;
        case CheckStatus::skipped:
            j["status"] = "skipped";
            j["skip_reason"] = report.skip_reason;
            break;
    }
    j["elapsed_ms"] = stable_output ? 0 : static_cast<long long>(report.elapsed.count());
    return j;
}

} // namespace mutvis
