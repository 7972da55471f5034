#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "mutvis/bitset.hpp"
#include "mutvis/errors.hpp"
#include "mutvis/product.hpp"

namespace mutvis {

/// An (m, n, s, t) instance: maximize the ones of an m x n binary matrix with
/// no all-ones s x t submatrix (s rows, t columns).
struct ZInstance {
    int m = 1;
    int n = 1;
    int s = 2;
    int t = 2;
};

/// Dense 0/1 matrix with at most 64 columns, one word per row.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return (row_bits_[static_cast<std::size_t>(i)] >> j) & 1u; }
    void set(int i, int j, bool value);

    std::uint64_t row_word(int i) const { return row_bits_[static_cast<std::size_t>(i)]; }
    void set_row_word(int i, std::uint64_t w) { row_bits_[static_cast<std::size_t>(i)] = w; }

    int ones() const;
    BinaryMatrix transposed() const;

    /// Rows rendered as strings of '0'/'1' characters.
    std::vector<std::string> to_strings() const;

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_bits_ == b.row_bits_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint64_t> row_bits_;
};

/// True iff the matrix contains an all-ones block of s rows and t columns.
bool has_all_ones_block(const BinaryMatrix& mat, int s, int t);

struct ZOptions {
    int dim_cap_22 = 7;           // per-dimension cap for the optimized (2,2) search
    long long cell_cap_general = 49; // m*n cap for the general (s,t) search
    std::chrono::milliseconds timeout{60'000};
};

struct ZResult {
    int value = 0;
    BinaryMatrix witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::microseconds elapsed{0};
    bool complete = true;
};

/// Exact Zarankiewicz number with a witness matrix. The (2,2) case runs a
/// row-by-row search over column-pair conflict masks with nonincreasing row
/// weights; when complete, the witness is the optimal matrix whose row-major
/// bit string is lexicographically largest. Other (s,t) fall back to a plain
/// cell-by-cell search. Throws CapExceededError beyond the caps.
ZResult z_exact(const ZInstance& inst, const ZOptions& opts = {});

/// Matrix view of a vertex set of K_m x K_n: entry (i,k) = 1 iff product
/// vertex (i,k) is in the set. Throws InvalidInputError on universe mismatch.
BinaryMatrix mv_set_to_matrix(const VertexSet& x, const ProductLabeling& lab);
VertexSet matrix_to_mv_set(const BinaryMatrix& mat, const ProductLabeling& lab);

/// Strict upper bound (s-1)^(1/t) (n-t+1) m^(1-1/t) + (t-1) m. Requires s,t > 1.
double kst_upper(const ZInstance& inst);

/// Lower bound floor((1 - 1/(s! t!)) m^(1-a) n^(1-b)) with a=(s-1)/(st-1),
/// b=(t-1)/(st-1). Requires st > 1.
long long projective_lower(const ZInstance& inst);

/// The classical window formulas for z(n,n;2,2): lower n^(3/2) - n^(4/3),
/// upper n(1+sqrt(4n-3))/2. Pure formula evaluation; the lower containment is
/// only guaranteed asymptotically.
struct ErdosWindow {
    double lower = 0;
    double upper = 0;
};
ErdosWindow erdos_window(int n);

} // namespace mutvis
