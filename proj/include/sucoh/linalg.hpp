#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace sucoh::linalg {

/* Sparse matrix over Z (modulus 0) or Z/N.  Entries are kept sorted by (row, col),
 * reduced mod N, zero-free. */
struct SparseMatrix {
    uint64_t rows = 0, cols = 0;
    uint64_t modulus = 0;
    std::vector<std::tuple<uint64_t, uint64_t, int64_t>> entries;

    void set(uint64_t r, uint64_t c, int64_t v);
    void normalize();
    SparseMatrix transpose() const;
};

struct AbGroupStructure {
    std::vector<uint64_t> invariant_factors;              // d_1 | d_2 | ...
    std::vector<std::vector<int64_t>> generators;         // ambient coordinate vectors
    uint64_t order() const {
        uint64_t o = 1;
        for (auto d : invariant_factors) o *= d;
        return o;
    }
};

/* Dense integer Smith normal form with unimodular transforms, arbitrary precision.
 * Matrices as row-major vector<vector<cpp_int>> are wrapped behind this interface. */
struct SmithResult {
    std::vector<std::vector<long long>> U, V;   // U A V = D (fits in long long for our sizes)
    std::vector<long long> diag;
};
SmithResult smith_normal_form(const std::vector<std::vector<long long>>& A);

/* Sparse row echelon over Z/N with Howell completion (annihilator rows) and
 * optional transform tracking through augmented tail columns. */
class ZnEchelon {
  public:
    using Row = std::vector<std::pair<uint64_t, int64_t>>;   // sorted by column

    ZnEchelon(uint64_t main_cols, uint64_t tail_cols, uint64_t N);

    // add vec (+ unit tail at tail slot `tag` if tag >= 0); returns false if
    // the row reduced to zero in the main block.
    void add_row(Row r);
    void add_tagged(Row main_part, uint64_t tag);

    // reduce a vector against the echelon (main block pivots only);
    // returns residual (main+tail merged representation).
    Row reduce(Row v) const;
    bool member(const Row& v) const;

    // rows whose main block vanished: tails give kernel/relation combinations
    std::vector<Row> null_tails() const;
    const std::vector<Row>& rows() const { return rows_; }
    uint64_t main_cols() const { return main_; }
    uint64_t modulus() const { return N_; }
    size_t pivot_count() const;

    void canonicalize();   // Howell normal form: reduce above pivots

  private:
    uint64_t main_, tail_, N_;
    std::vector<Row> rows_;               // echelon rows, pivot col increasing
    std::map<uint64_t, size_t> by_pivot_; // leading main col -> row index
    std::vector<Row> null_;
    void insert_worklist(Row v);
};

/* Dense F2 echelon over bit-packed rows; same augmented-tail convention. */
class F2Echelon {
  public:
    F2Echelon(uint64_t main_cols, uint64_t tail_cols);

    using Bits = std::vector<uint64_t>;
    Bits make_row() const { return Bits(words_, 0); }
    static void set_bit(Bits& b, uint64_t i) { b[i >> 6] ^= (uint64_t(1) << (i & 63)); }
    static bool get_bit(const Bits& b, uint64_t i) { return (b[i >> 6] >> (i & 63)) & 1; }

    void add_row(Bits b);
    void add_tagged(Bits main_part, uint64_t tag);
    Bits reduce(Bits v) const;
    bool member(const Bits& v) const;
    const std::vector<Bits>& null_tails() const { return null_; }
    uint64_t main_cols() const { return main_; }
    size_t pivot_count() const { return rows_.size(); }

  private:
    uint64_t main_, tail_, words_;
    std::vector<Bits> rows_;
    std::vector<int64_t> pivots_;         // main-block pivot of each row (sorted)
    std::vector<Bits> null_;
};

/* High-level operations on SparseMatrix (spec surface). */
SparseMatrix howell_form(const SparseMatrix& M);
std::optional<std::vector<int64_t>> solve(const SparseMatrix& A, const std::vector<int64_t>& b);
AbGroupStructure subquotient(const SparseMatrix& d_n, const SparseMatrix& d_nm1);

/* Module structure of Z^n / rowspan(relations) over Z/N (N > 0), with generator
 * coordinates mapped back through the given ambient vectors if provided. */
AbGroupStructure quotient_structure(const std::vector<std::vector<std::pair<uint64_t, int64_t>>>& rel_rows,
                                    uint64_t ngens, uint64_t N);

}  // namespace sucoh::linalg
