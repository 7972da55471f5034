#include "mutvis/zarankiewicz.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mutvis {

namespace {
using Clock = std::chrono::steady_clock;
}

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0 || cols > 64)
        throw InvalidInputError("binary matrix supports 0..64 columns");
    row_bits_.assign(static_cast<std::size_t>(rows), 0);
}

void BinaryMatrix::set(int i, int j, bool value) {
    if (value)
        row_bits_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    else
        row_bits_[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
}

int BinaryMatrix::ones() const {
    int c = 0;
    for (auto w : row_bits_) c += std::popcount(w);
    return c;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) out.set(j, i, true);
    return out;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
        std::string row(static_cast<std::size_t>(cols_), '0');
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) row[static_cast<std::size_t>(j)] = '1';
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

bool block_search(const BinaryMatrix& mat, int from_row, int depth, std::uint64_t acc, int s,
                  int t) {
    if (std::popcount(acc) < t) return false;
    if (depth == s) return true;
    for (int r = from_row; r < mat.rows(); ++r)
        if (block_search(mat, r + 1, depth + 1, acc & mat.row_word(r), s, t)) return true;
    return false;
}

} // namespace

bool has_all_ones_block(const BinaryMatrix& mat, int s, int t) {
    if (s < 1 || t < 1) throw InvalidInputError("block dimensions must be positive");
    return block_search(mat, 0, 0, ~std::uint64_t{0} >> (64 - std::max(mat.cols(), 1)), s, t);
}

namespace {

// ----- optimized z(m,n;2,2): rows as column subsets, conflicts as column pairs

int pair_index(int a, int b, int n) { // a < b
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

struct Z22Context {
    int m = 0;
    int n = 0;
    int total_pairs = 0;
    // Column subsets grouped by weight, each with its column-pair mask;
    // within a weight, descending mask order.
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> by_weight;

    explicit Z22Context(int rows, int cols) : m(rows), n(cols) {
        total_pairs = n * (n - 1) / 2;
        by_weight.assign(static_cast<std::size_t>(n) + 1, {});
        for (std::uint64_t mask = (std::uint64_t{1} << n); mask-- > 0;) {
            std::uint64_t pairs = 0;
            for (int a = 0; a < n; ++a) {
                if (!((mask >> a) & 1)) continue;
                for (int b = a + 1; b < n; ++b)
                    if ((mask >> b) & 1) pairs |= std::uint64_t{1} << pair_index(a, b, n);
            }
            by_weight[static_cast<std::size_t>(std::popcount(mask))].emplace_back(mask, pairs);
        }
    }
};

struct Z22Search {
    Z22Search(const Z22Context& c, Clock::time_point d) : ctx(c), deadline(d) {}

    const Z22Context& ctx;
    Clock::time_point deadline;
    int best = -1;
    std::vector<std::uint64_t> cur_rows;
    std::vector<std::uint64_t> best_rows;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    void record_if_better(int ones) {
        if (ones <= best) return;
        best = ones;
        best_rows = cur_rows;
        best_rows.resize(static_cast<std::size_t>(ctx.m), 0);
    }

    // Nonincreasing row weights: every matrix is row-permutable into this
    // form, so the restriction is value-preserving.
    void dfs(int row, int prev_w, int ones, std::uint64_t used, int pairs_left) {
        if ((++nodes & 4095u) == 0 && Clock::now() > deadline) timed_out = true;
        if (timed_out) return;
        record_if_better(ones);
        if (row == ctx.m) return;
        const int rows_left = ctx.m - row;
        if (ones + std::min(rows_left * prev_w, rows_left + pairs_left) <= best) return;
        for (int w = std::min(prev_w, ctx.n); w >= 0; --w) {
            if (ones + w * rows_left <= best) break; // weight cap bound is monotone in w
            if (ones + w + (rows_left - 1) + pairs_left - w * (w - 1) / 2 <= best &&
                ones + w + (rows_left - 1) * w <= best)
                continue;
            for (auto [mask, pairs] : ctx.by_weight[static_cast<std::size_t>(w)]) {
                if (pairs & used) continue;
                cur_rows.push_back(mask);
                dfs(row + 1, w, ones + w, used | pairs, pairs_left - std::popcount(pairs));
                cur_rows.pop_back();
                if (timed_out) return;
            }
        }
    }
};

// Decision search used for the canonical witness: can the fixed prefix of
// cells (row-major) be completed to exactly `target` ones? No symmetry
// reduction here since the prefix pins arbitrary cells.
struct Z22Decide {
    Z22Decide(const Z22Context& c, int t) : ctx(c), target(t) {}

    const Z22Context& ctx;
    int target;
    std::uint64_t nodes = 0;
    std::vector<std::uint64_t> assign;     // scratch rows for the running branch
    std::vector<std::uint64_t> completion; // rows of the last successful completion

    int row_bound(int ones, int j, int roww, int pairs_left, int rows_below) const {
        // Largest number of further ones the current row can take: a ones cost
        // a*roww + C(a,2) column pairs.
        int a_max = 0;
        for (int a = ctx.n - j; a >= 0; --a)
            if (a * roww + a * (a - 1) / 2 <= pairs_left) {
                a_max = a;
                break;
            }
        // Weight cap for any later row: C(w,2) <= pairs_left individually, and
        // the shared budget allows at most rows_below + pairs_left in total.
        int w_cap = 0;
        for (int w = ctx.n; w >= 0; --w)
            if (w * (w - 1) / 2 <= pairs_left) {
                w_cap = w;
                break;
            }
        int below = std::min(rows_below * w_cap, rows_below + pairs_left);
        return ones + a_max + below;
    }

    bool complete(const std::vector<std::uint64_t>& fixed_rows, int fixed_cells) {
        assign.assign(static_cast<std::size_t>(ctx.m), 0);
        return step(fixed_rows, fixed_cells, 0, 0, 0, 0, 0, 0, ctx.total_pairs);
    }

    bool step(const std::vector<std::uint64_t>& fixed_rows, int fixed_cells, int cell, int ones,
              int i, int j, std::uint64_t rowmask, std::uint64_t used, int pairs_left) {
        ++nodes;
        if (ones > target) return false;
        if (row_bound(ones, j, std::popcount(rowmask), pairs_left, ctx.m - i - 1) < target)
            return false;
        if (j == ctx.n) {
            assign[static_cast<std::size_t>(i)] = rowmask;
            if (i + 1 == ctx.m) {
                if (ones != target) return false;
                completion = assign;
                return true;
            }
            return step(fixed_rows, fixed_cells, cell, ones, i + 1, 0, 0, used, pairs_left);
        }
        bool forced = cell < fixed_cells;
        for (int choice = 1; choice >= 0; --choice) {
            if (forced && ((fixed_rows[static_cast<std::size_t>(i)] >> j) & 1) != static_cast<std::uint64_t>(choice))
                continue;
            if (choice == 1) {
                std::uint64_t new_pairs = 0;
                bool conflict = false;
                std::uint64_t bits = rowmask;
                while (bits) {
                    int a = std::countr_zero(bits);
                    bits &= bits - 1;
                    std::uint64_t p = std::uint64_t{1} << pair_index(a, j, ctx.n);
                    if (used & p) {
                        conflict = true;
                        break;
                    }
                    new_pairs |= p;
                }
                if (conflict) continue;
                if (step(fixed_rows, fixed_cells, cell + 1, ones + 1, i, j + 1,
                         rowmask | (std::uint64_t{1} << j), used | new_pairs,
                         pairs_left - std::popcount(new_pairs)))
                    return true;
            } else {
                if (step(fixed_rows, fixed_cells, cell + 1, ones, i, j + 1, rowmask, used,
                         pairs_left))
                    return true;
            }
        }
        return false;
    }
};

// ----- general z(m,n;s,t): plain cell-by-cell search, tiny instances only

struct GeneralSearch {
    int m, n, s, t;
    Clock::time_point deadline;
    std::vector<std::uint64_t> rows;
    std::vector<std::uint64_t> best_rows;
    int best = -1;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    GeneralSearch(int m_, int n_, int s_, int t_)
        : m(m_), n(n_), s(s_), t(t_), rows(static_cast<std::size_t>(m_), 0),
          best_rows(static_cast<std::size_t>(m_), 0) {}

    bool creates_block(int i) const {
        // Any block closed by the newest 1 uses row i plus s-1 earlier rows.
        return pick(0, 1, rows[static_cast<std::size_t>(i)], i);
    }

    // Only rows strictly above `limit` can contribute: later rows hold no ones
    // yet under the row-major fill order.
    bool pick(int from, int depth, std::uint64_t acc, int limit) const {
        if (std::popcount(acc) < t) return false;
        if (depth == s) return true;
        for (int r = from; r < limit; ++r)
            if (pick(r + 1, depth + 1, acc & rows[static_cast<std::size_t>(r)], limit)) return true;
        return false;
    }

    void dfs(int cell, int ones) {
        if ((++nodes & 4095u) == 0 && Clock::now() > deadline) timed_out = true;
        if (timed_out) return;
        if (ones > best) {
            best = ones;
            best_rows = rows;
        }
        if (cell == m * n) return;
        if (ones + m * n - cell <= best) return;
        int i = cell / n, j = cell % n;
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        if (!creates_block(i)) dfs(cell + 1, ones + 1);
        rows[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
        if (timed_out) return;
        dfs(cell + 1, ones);
    }

    // Lexicographically-largest-witness decision: can the prefix reach target?
    bool decide(int cell, int ones, int target) {
        ++nodes;
        if (ones + m * n - cell < target || ones > target) return false;
        if (cell == m * n) return ones == target;
        int i = cell / n, j = cell % n;
        rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        bool ok = !creates_block(i) && decide(cell + 1, ones + 1, target);
        rows[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
        if (ok) return true;
        return decide(cell + 1, ones, target);
    }
};

} // namespace

ZResult z_exact(const ZInstance& inst, const ZOptions& opts) {
    if (inst.m < 1 || inst.n < 1 || inst.s < 1 || inst.t < 1)
        throw InvalidInputError("z instance parameters must be positive");
    const auto started = Clock::now();
    ZResult result;

    if (inst.s == 2 && inst.t == 2) {
        if (inst.m > opts.dim_cap_22 || inst.n > opts.dim_cap_22)
            throw CapExceededError("z(m,n;2,2) search cap is " + std::to_string(opts.dim_cap_22) +
                                   " per dimension");
        if (inst.n * (inst.n - 1) / 2 > 64 || inst.n > 64)
            throw CapExceededError("z(m,n;2,2) search supports at most 11 columns");
        Z22Context ctx(inst.m, inst.n);
        Z22Search search(ctx, started + opts.timeout);
        search.dfs(0, inst.n, 0, 0, ctx.total_pairs);
        result.value = search.best;
        result.nodes_explored = search.nodes;
        result.complete = !search.timed_out;
        BinaryMatrix witness(inst.m, inst.n);
        for (int i = 0; i < inst.m; ++i) witness.set_row_word(i, search.best_rows[static_cast<std::size_t>(i)]);
        result.witness = witness;

        if (result.complete) {
            // Greedy bit-by-bit canonicalization: keep a 1 whenever the prefix
            // still completes to the optimum. A successful search hands back
            // its completion; later cells agreeing with it need no search.
            Z22Decide decide(ctx, result.value);
            std::vector<std::uint64_t> prefix(static_cast<std::size_t>(inst.m), 0);
            if (!decide.complete(prefix, 0))
                throw Error("internal error: optimum not reachable in canonicalization");
            std::vector<std::uint64_t> witness_rows = decide.completion;
            int cell = 0;
            for (int i = 0; i < inst.m; ++i)
                for (int j = 0; j < inst.n; ++j, ++cell) {
                    const std::uint64_t bit = std::uint64_t{1} << j;
                    if (witness_rows[static_cast<std::size_t>(i)] & bit) {
                        prefix[static_cast<std::size_t>(i)] |= bit; // already certified
                        continue;
                    }
                    prefix[static_cast<std::size_t>(i)] |= bit;
                    if (decide.complete(prefix, cell + 1))
                        witness_rows = decide.completion;
                    else
                        prefix[static_cast<std::size_t>(i)] &= ~bit;
                }
            BinaryMatrix canonical(inst.m, inst.n);
            for (int i = 0; i < inst.m; ++i) canonical.set_row_word(i, prefix[static_cast<std::size_t>(i)]);
            if (canonical.ones() != result.value)
                throw Error("internal error: canonical z witness lost ones");
            result.witness = canonical;
            result.nodes_explored += decide.nodes;
        }
    } else {
        if (static_cast<long long>(inst.m) * inst.n > opts.cell_cap_general)
            throw CapExceededError("general z search cap is m*n <= " +
                                   std::to_string(opts.cell_cap_general));
        if (inst.n > 64) throw CapExceededError("general z search supports at most 64 columns");
        GeneralSearch search(inst.m, inst.n, inst.s, inst.t);
        search.deadline = started + opts.timeout;
        search.dfs(0, 0);
        result.value = search.best;
        result.nodes_explored = search.nodes;
        result.complete = !search.timed_out;
        BinaryMatrix witness(inst.m, inst.n);
        for (int i = 0; i < inst.m; ++i) witness.set_row_word(i, search.best_rows[static_cast<std::size_t>(i)]);
        result.witness = witness;
        if (result.complete) {
            GeneralSearch canon(inst.m, inst.n, inst.s, inst.t);
            canon.deadline = started + opts.timeout;
            std::uint64_t ignored = 0;
            int cell = 0;
            int ones = 0;
            for (int i = 0; i < inst.m; ++i)
                for (int j = 0; j < inst.n; ++j, ++cell) {
                    canon.rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                    bool keep = !canon.creates_block(i) && [&] {
                        GeneralSearch probe = canon;
                        return probe.decide(cell + 1, ones + 1, result.value);
                    }();
                    if (keep)
                        ++ones;
                    else
                        canon.rows[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
                }
            (void)ignored;
            if (ones != result.value) throw Error("internal error: canonical z witness lost ones");
            BinaryMatrix canonical(inst.m, inst.n);
            for (int i = 0; i < inst.m; ++i) canonical.set_row_word(i, canon.rows[static_cast<std::size_t>(i)]);
            result.witness = canonical;
        }
    }

    if (result.complete && has_all_ones_block(result.witness, inst.s, inst.t))
        throw Error("internal error: z witness contains a forbidden block");
    result.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - started);
    return result;
}

BinaryMatrix mv_set_to_matrix(const VertexSet& x, const ProductLabeling& lab) {
    if (x.universe() != lab.product_order())
        throw InvalidInputError("vertex set universe does not match the product labeling");
    if (lab.right_order() > 64)
        throw CapExceededError("matrix view supports at most 64 columns");
    BinaryMatrix mat(lab.left_order(), lab.right_order());
    for (int v : x) {
        auto [g, h] = lab.backward(v);
        mat.set(g, h, true);
    }
    return mat;
}

VertexSet matrix_to_mv_set(const BinaryMatrix& mat, const ProductLabeling& lab) {
    if (mat.rows() != lab.left_order() || mat.cols() != lab.right_order())
        throw InvalidInputError("matrix dimensions do not match the product labeling");
    VertexSet x(lab.product_order());
    for (int i = 0; i < mat.rows(); ++i)
        for (int j = 0; j < mat.cols(); ++j)
            if (mat.get(i, j)) x.add(lab.forward(i, j));
    return x;
}

double kst_upper(const ZInstance& inst) {
    if (inst.s <= 1 || inst.t <= 1) throw InvalidInputError("kst_upper requires s,t > 1");
    double m = inst.m, n = inst.n, s = inst.s, t = inst.t;
    return std::pow(s - 1, 1.0 / t) * (n - t + 1) * std::pow(m, 1.0 - 1.0 / t) + (t - 1) * m;
}

long long projective_lower(const ZInstance& inst) {
    if (inst.s * inst.t <= 1) throw InvalidInputError("projective_lower requires st > 1");
    auto factorial = [](int k) {
        long double f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    long double st1 = static_cast<long double>(inst.s) * inst.t - 1;
    long double alpha = (inst.s - 1) / st1;
    long double beta = (inst.t - 1) / st1;
    long double value = (1.0L - 1.0L / (factorial(inst.s) * factorial(inst.t))) *
                        std::pow(static_cast<long double>(inst.m), 1.0L - alpha) *
                        std::pow(static_cast<long double>(inst.n), 1.0L - beta);
    // Guard against values like 3.0 evaluating to 2.999999... before the floor.
    return static_cast<long long>(std::floor(value + 1e-9L * std::max<long double>(1.0L, value)));
}

ErdosWindow erdos_window(int n) {
    if (n < 1) throw InvalidInputError("erdos_window requires n >= 1");
    ErdosWindow w;
    w.lower = std::pow(n, 1.5) - std::pow(n, 4.0 / 3.0);
    w.upper = 0.5 * n * (1.0 + std::sqrt(4.0 * n - 3.0));
    return w;
}

} // namespace mutvis
