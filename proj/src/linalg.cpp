#include "sucoh/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace sucoh::linalg {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------- SparseMatrix

void SparseMatrix::set(uint64_t r, uint64_t c, int64_t v) {
    if (modulus) {
        v %= int64_t(modulus);
        if (v < 0) v += int64_t(modulus);
    }
    if (v) entries.emplace_back(r, c, v);
}

void SparseMatrix::normalize() {
    std::sort(entries.begin(), entries.end());
    std::vector<std::tuple<uint64_t, uint64_t, int64_t>> out;
    for (auto& [r, c, v] : entries) {
        int64_t vv = v;
        if (modulus) { vv %= int64_t(modulus); if (vv < 0) vv += int64_t(modulus); }
        if (!out.empty() && std::get<0>(out.back()) == r && std::get<1>(out.back()) == c) {
            auto& bv = std::get<2>(out.back());
            bv += vv;
            if (modulus) bv %= int64_t(modulus);
            if (bv == 0) out.pop_back();
        } else if (vv) {
            out.emplace_back(r, c, vv);
        }
    }
    entries.swap(out);
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t;
    t.rows = cols; t.cols = rows; t.modulus = modulus;
    t.entries.reserve(entries.size());
    for (auto& [r, c, v] : entries) t.entries.emplace_back(c, r, v);
    t.normalize();
    return t;
}

// ---------------------------------------------------------------- Smith (dense, cpp_int inside)

SmithResult smith_normal_form(const std::vector<std::vector<long long>>& A0) {
    size_t m = A0.size(), n = m ? A0[0].size() : 0;
    std::vector<std::vector<cpp_int>> A(m, std::vector<cpp_int>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j) A[i][j] = A0[i][j];
    std::vector<std::vector<cpp_int>> U(m, std::vector<cpp_int>(m)), V(n, std::vector<cpp_int>(n));
    for (size_t i = 0; i < m; ++i) U[i][i] = 1;
    for (size_t j = 0; j < n; ++j) V[j][j] = 1;

    auto addrow = [&](size_t i, size_t j, const cpp_int& c) {
        for (size_t k = 0; k < n; ++k) A[i][k] += c * A[j][k];
        for (size_t k = 0; k < m; ++k) U[i][k] += c * U[j][k];
    };
    auto addcol = [&](size_t i, size_t j, const cpp_int& c) {
        for (size_t k = 0; k < m; ++k) A[k][i] += c * A[k][j];
        for (size_t k = 0; k < n; ++k) V[k][i] += c * V[k][j];
    };
    auto swaprow = [&](size_t i, size_t j) { std::swap(A[i], A[j]); std::swap(U[i], U[j]); };
    auto swapcol = [&](size_t i, size_t j) {
        for (size_t k = 0; k < m; ++k) std::swap(A[k][i], A[k][j]);
        for (size_t k = 0; k < n; ++k) std::swap(V[k][i], V[k][j]);
    };

    size_t t = 0;
    while (t < std::min(m, n)) {
        size_t bi = m, bj = n;
        cpp_int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (A[i][j] != 0 && (best == 0 || abs(A[i][j]) < abs(best))) {
                    best = A[i][j]; bi = i; bj = j;
                }
        if (bi == m) break;
        swaprow(t, bi); swapcol(t, bj);
        bool stable = false;
        while (!stable) {
            stable = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (A[i][t] == 0) continue;
                cpp_int qq = A[i][t] / A[t][t];
                addrow(i, t, -qq);
                if (A[i][t] != 0) { swaprow(t, i); stable = false; }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (A[t][j] == 0) continue;
                cpp_int qq = A[t][j] / A[t][t];
                addcol(j, t, -qq);
                if (A[t][j] != 0) { swapcol(t, j); stable = false; }
            }
        }
        if (A[t][t] < 0) {
            for (size_t k = 0; k < n; ++k) A[t][k] = -A[t][k];
            for (size_t k = 0; k < m; ++k) U[t][k] = -U[t][k];
        }
        bool redo = false;
        for (size_t i = t + 1; i < m && !redo; ++i)
            for (size_t j = t + 1; j < n && !redo; ++j)
                if (A[i][j] % A[t][t] != 0) {
                    addrow(t, i, 1);
                    redo = true;
                }
        if (!redo) ++t;
    }
    SmithResult res;
    res.diag.resize(std::min(m, n));
    for (size_t i = 0; i < res.diag.size(); ++i)
        res.diag[i] = (long long)A[i][i];
    res.U.assign(m, std::vector<long long>(m));
    res.V.assign(n, std::vector<long long>(n));
    for (size_t i = 0; i < m; ++i)
        for (size_t k = 0; k < m; ++k) res.U[i][k] = (long long)U[i][k];
    for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) res.V[j][k] = (long long)V[j][k];
    return res;
}

// ---------------------------------------------------------------- Z/N echelon

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t xgcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) { x = 1; y = 0; return a; }
    int64_t x1, y1;
    int64_t g = xgcd(b, a % b, x1, y1);
    x = y1; y = x1 - (a / b) * y1;
    return g;
}

// unit u (mod N) with u*v == gcd(v, N) mod N
int64_t unit_for(int64_t v, int64_t N) {
    int64_t g = gcd64(v, N);
    int64_t vg = v / g, Ng = N / g;
    if (Ng == 1) return 1;
    int64_t x, y;
    int64_t gg = xgcd(((vg % Ng) + Ng) % Ng, Ng, x, y);
    (void)gg;
    int64_t u = ((x % Ng) + Ng) % Ng;
    while (gcd64(u, N) != 1) u += Ng;
    return u % N;
}

}  // namespace

ZnEchelon::ZnEchelon(uint64_t main_cols, uint64_t tail_cols, uint64_t N)
    : main_(main_cols), tail_(tail_cols), N_(N) {}

static void row_normalize(ZnEchelon::Row& r, int64_t N) {
    std::sort(r.begin(), r.end());
    ZnEchelon::Row out;
    out.reserve(r.size());
    for (auto& [c, v] : r) {
        int64_t vv = ((v % N) + N) % N;
        if (!out.empty() && out.back().first == c) {
            out.back().second = (out.back().second + vv) % N;
            if (out.back().second == 0) out.pop_back();
        } else if (vv) {
            out.emplace_back(c, vv);
        }
    }
    r.swap(out);
}

// r -= c * s (mod N)
static void row_axpy(ZnEchelon::Row& r, int64_t c, const ZnEchelon::Row& s, int64_t N) {
    ZnEchelon::Row out;
    out.reserve(r.size() + s.size());
    size_t i = 0, j = 0;
    c = ((c % N) + N) % N;
    while (i < r.size() || j < s.size()) {
        if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
            out.push_back(r[i++]);
        } else if (i == r.size() || s[j].first < r[i].first) {
            int64_t v = (N - (c * s[j].second) % N) % N;
            if (v) out.emplace_back(s[j].first, v);
            ++j;
        } else {
            int64_t v = ((r[i].second - (c * s[j].second) % N) % N + N) % N;
            if (v) out.emplace_back(r[i].first, v);
            ++i; ++j;
        }
    }
    r.swap(out);
}

void ZnEchelon::insert_worklist(Row v) {
    std::vector<Row> work;
    work.push_back(std::move(v));
    while (!work.empty()) {
        Row r = std::move(work.back());
        work.pop_back();
        row_normalize(r, N_);
        for (;;) {
            // leading main entry
            if (r.empty() || r.front().first >= main_) {
                if (!r.empty()) null_.push_back(std::move(r));
                break;
            }
            uint64_t lead = r.front().first;
            int64_t val = r.front().second;
            auto it = by_pivot_.find(lead);
            if (it == by_pivot_.end()) {
                int64_t u = unit_for(val, N_);
                if (u != 1)
                    for (auto& [c, vv] : r) vv = (vv * u) % N_;
                int64_t piv = r.front().second;
                int64_t ann = N_ / gcd64(piv, N_);
                size_t idx = rows_.size();
                rows_.push_back(r);
                by_pivot_[lead] = idx;
                if (ann != 1 && ann != int64_t(N_)) {
                    Row a = r;
                    for (auto& [c, vv] : a) vv = (vv * ann) % N_;
                    row_normalize(a, N_);
                    if (!a.empty()) work.push_back(std::move(a));
                }
                break;
            }
            Row& prow = rows_[it->second];
            int64_t p = prow.front().second;
            if (val % p == 0) {
                row_axpy(r, val / p, prow, N_);
                continue;
            }
            // gcd combine: replace pivot row, requeue both remainders
            int64_t x, y;
            int64_t g = xgcd(p, val, x, y);
            Row comb = prow;
            for (auto& [c, vv] : comb) vv = ((vv * (x % int64_t(N_))) % int64_t(N_) + N_) % N_;
            {
                Row tmp = r;
                for (auto& [c, vv] : tmp) vv = ((vv * (y % int64_t(N_))) % int64_t(N_) + N_) % N_;
                for (auto& e : tmp) comb.push_back(e);
                row_normalize(comb, N_);
            }
            Row resid = r;
            for (auto& [c, vv] : resid) vv = (vv * ((p / g) % int64_t(N_))) % N_;
            {
                Row tmp = prow;
                int64_t f = ((-(val / g)) % int64_t(N_) + N_) % N_;
                for (auto& [c, vv] : tmp) vv = (vv * f) % N_;
                for (auto& e : tmp) resid.push_back(e);
                row_normalize(resid, N_);
            }
            // remove old pivot row
            size_t dead = it->second;
            by_pivot_.erase(it);
            rows_[dead].clear();
            work.push_back(std::move(comb));
            if (!resid.empty()) work.push_back(std::move(resid));
            r.clear();
            break;
        }
    }
}

void ZnEchelon::add_row(Row r) { insert_worklist(std::move(r)); }

void ZnEchelon::add_tagged(Row main_part, uint64_t tag) {
    main_part.emplace_back(main_ + tag, 1);
    insert_worklist(std::move(main_part));
}

ZnEchelon::Row ZnEchelon::reduce(Row v) const {
    row_normalize(v, N_);
    for (;;) {
        auto lead = v.begin();
        while (lead != v.end() && lead->first < main_) {
            auto it = by_pivot_.find(lead->first);
            if (it == by_pivot_.end()) { ++lead; continue; }
            const Row& prow = rows_[it->second];
            int64_t p = prow.front().second;
            if (lead->second % p != 0) { ++lead; continue; }
            row_axpy(v, lead->second / p, prow, N_);
            lead = v.begin();
        }
        break;
    }
    return v;
}

bool ZnEchelon::member(const Row& v) const {
    Row r = reduce(v);
    for (auto& [c, vv] : r)
        if (c < main_ && vv % N_) return false;
    return true;
}

std::vector<ZnEchelon::Row> ZnEchelon::null_tails() const {
    std::vector<Row> out;
    for (auto& r : null_) {
        Row t;
        for (auto& [c, v] : r)
            if (c >= main_) t.emplace_back(c - main_, v);
        if (!t.empty()) out.push_back(std::move(t));
    }
    return out;
}

size_t ZnEchelon::pivot_count() const { return by_pivot_.size(); }

void ZnEchelon::canonicalize() {
    // compact dead rows
    std::vector<Row> live;
    live.reserve(by_pivot_.size());
    for (auto& [piv, idx] : by_pivot_) live.push_back(std::move(rows_[idx]));
    rows_.swap(live);
    by_pivot_.clear();
    for (size_t i = 0; i < rows_.size(); ++i) by_pivot_[rows_[i].front().first] = i;
    // reduce entries above each pivot modulo that pivot value
    for (size_t i = rows_.size(); i-- > 0;) {
        for (size_t j = i + 1; j < rows_.size(); ++j) {
            uint64_t pc = rows_[j].front().first;
            int64_t pv = rows_[j].front().second;
            auto it = std::lower_bound(rows_[i].begin(), rows_[i].end(), std::make_pair(pc, int64_t(0)));
            if (it == rows_[i].end() || it->first != pc) continue;
            int64_t q = it->second / pv;
            if (q) row_axpy(rows_[i], q, rows_[j], N_);
        }
    }
}

// ---------------------------------------------------------------- F2 echelon

F2Echelon::F2Echelon(uint64_t main_cols, uint64_t tail_cols)
    : main_(main_cols), tail_(tail_cols), words_((main_cols + tail_cols + 63) / 64) {}

static int64_t first_bit_below(const F2Echelon::Bits& b, uint64_t limit) {
    uint64_t wl = (limit + 63) / 64;
    for (uint64_t w = 0; w < wl && w < b.size(); ++w) {
        if (b[w]) {
            uint64_t bit = w * 64 + uint64_t(__builtin_ctzll(b[w]));
            if (bit < limit) return int64_t(bit);
            return -1;  // first set bit is beyond main block in this word
        }
    }
    return -1;
}

void F2Echelon::add_row(Bits b) {
    b = reduce(std::move(b));
    int64_t p = first_bit_below(b, main_);
    if (p < 0) {
        bool any = false;
        for (auto w : b) if (w) { any = true; break; }
        if (any) null_.push_back(std::move(b));
        return;
    }
    // keep the echelon fully reduced: clear column p everywhere
    uint64_t pw = uint64_t(p) >> 6, pb = uint64_t(p) & 63;
    for (auto& r : rows_)
        if ((r[pw] >> pb) & 1)
            for (size_t w = 0; w < r.size(); ++w) r[w] ^= b[w];
    for (auto& r : null_)
        if ((r[pw] >> pb) & 1)
            for (size_t w = 0; w < r.size(); ++w) r[w] ^= b[w];
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    size_t idx = size_t(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + idx, std::move(b));
}

void F2Echelon::add_tagged(Bits main_part, uint64_t tag) {
    set_bit(main_part, main_ + tag);
    add_row(std::move(main_part));
}

F2Echelon::Bits F2Echelon::reduce(Bits v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint64_t p = uint64_t(pivots_[i]);
        if ((v[p >> 6] >> (p & 63)) & 1) {
            const Bits& r = rows_[i];
            for (size_t w = p >> 6; w < v.size(); ++w) v[w] ^= r[w];
        }
    }
    return v;
}

bool F2Echelon::member(const Bits& v) const {
    Bits r = reduce(v);
    uint64_t wl = main_ / 64;
    for (uint64_t w = 0; w < wl; ++w)
        if (r[w]) return false;
    if (main_ % 64) {
        uint64_t mask = (uint64_t(1) << (main_ % 64)) - 1;
        if (r[wl] & mask) return false;
    }
    return true;
}

// ---------------------------------------------------------------- high level

SparseMatrix howell_form(const SparseMatrix& M) {
    if (!M.modulus) throw std::invalid_argument("howell_form needs N > 0");
    ZnEchelon E(M.cols, 0, M.modulus);
    std::map<uint64_t, ZnEchelon::Row> rows;
    for (auto& [r, c, v] : M.entries) rows[r].emplace_back(c, v);
    for (auto& [r, row] : rows) E.add_row(row);
    E.canonicalize();
    SparseMatrix out;
    out.cols = M.cols; out.modulus = M.modulus;
    uint64_t r = 0;
    for (auto& row : E.rows()) {
        for (auto& [c, v] : row) out.set(r, c, v);
        ++r;
    }
    out.rows = r;
    out.normalize();
    return out;
}

std::optional<std::vector<int64_t>> solve(const SparseMatrix& A, const std::vector<int64_t>& b) {
    if (!A.modulus) throw std::invalid_argument("solve needs N > 0");
    int64_t N = int64_t(A.modulus);
    ZnEchelon E(A.rows, A.cols, A.modulus);
    // columns of A as main vectors, tagged by column index
    std::map<uint64_t, ZnEchelon::Row> cols;
    for (auto& [r, c, v] : A.entries) cols[c].emplace_back(r, v);
    for (uint64_t c = 0; c < A.cols; ++c) {
        auto it = cols.find(c);
        E.add_tagged(it == cols.end() ? ZnEchelon::Row{} : it->second, c);
    }
    ZnEchelon::Row bv;
    for (uint64_t i = 0; i < b.size(); ++i)
        if (b[i] % N) bv.emplace_back(i, ((b[i] % N) + N) % N);
    auto res = E.reduce(bv);
    std::vector<int64_t> x(A.cols, 0);
    for (auto& [c, v] : res) {
        if (c < A.rows) return std::nullopt;
        x[c - A.rows] = (N - v) % N;
    }
    return x;
}

AbGroupStructure quotient_structure(const std::vector<std::vector<std::pair<uint64_t, int64_t>>>& rel_rows,
                                    uint64_t ngens, uint64_t N) {
    // factor N into prime powers, run local smith, CRT-merge
    std::vector<std::pair<uint64_t, uint64_t>> pp;   // (p^e, p)
    {
        uint64_t M = N;
        for (uint64_t p = 2; p * p <= M; ++p)
            if (M % p == 0) {
                uint64_t q = 1;
                while (M % p == 0) { q *= p; M /= p; }
                pp.emplace_back(q, p);
            }
        if (M > 1) pp.emplace_back(M, M);
    }
    struct Local {
        std::vector<uint64_t> facs;                  // ascending
        std::vector<std::vector<int64_t>> gens;      // coordinate vectors
    };
    std::vector<Local> locals;
    for (auto& [q, p] : pp) {
        // dense local smith over Z/q with column transform
        // first compress relations through an echelon to at most ngens rows
        ZnEchelon E(ngens, 0, q);
        for (auto& r : rel_rows) {
            ZnEchelon::Row rr;
            for (auto& [c, v] : r)
                if (v % int64_t(q)) rr.emplace_back(c, ((v % int64_t(q)) + q) % q);
            if (!rr.empty()) E.add_row(rr);
        }
        E.canonicalize();
        std::vector<std::vector<int64_t>> A;
        for (auto& row : E.rows()) {
            std::vector<int64_t> dense(ngens, 0);
            for (auto& [c, v] : row) dense[c] = v;
            A.push_back(std::move(dense));
        }
        // V tracks column ops: columns of V = generator combinations
        std::vector<std::vector<int64_t>> V(ngens, std::vector<int64_t>(ngens, 0));
        for (uint64_t i = 0; i < ngens; ++i) V[i][i] = 1;
        size_t m = A.size();
        auto val2 = [&](int64_t v) {
            if (v % int64_t(q) == 0) return uint64_t(64);
            uint64_t k = 0; uint64_t g = p;
            v = ((v % int64_t(q)) + q) % q;
            while (v % int64_t(g) == 0) { ++k; g *= p; }
            return k;
        };
        size_t t = 0;
        std::vector<uint64_t> diag;
        size_t nc = ngens;
        // convert to column-major-friendly dense elimination
        for (; t < std::min(m, size_t(nc)); ++t) {
            size_t bi = m, bj = nc;
            uint64_t bv = 64;
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < nc; ++j) {
                    uint64_t w = val2(A[i][j]);
                    if (w < bv) { bv = w; bi = i; bj = j; }
                }
            if (bi == m) break;
            std::swap(A[t], A[bi]);
            for (size_t i = 0; i < m; ++i) std::swap(A[i][t], A[i][bj]);
            for (size_t i = 0; i < ngens; ++i) std::swap(V[i][t], V[i][bj]);
            int64_t piv = A[t][t];
            int64_t u = unit_for(piv, q);
            if (u != 1)
                for (size_t j = t; j < nc; ++j) A[t][j] = (A[t][j] * u) % int64_t(q);
            piv = A[t][t];
            for (size_t i = t + 1; i < m; ++i) {
                if (A[i][t] % int64_t(q) == 0) { A[i][t] = 0; continue; }
                int64_t c = A[i][t] / piv;
                for (size_t j = t; j < nc; ++j)
                    A[i][j] = ((A[i][j] - c * A[t][j]) % int64_t(q) + q) % q;
            }
            for (size_t j = t + 1; j < nc; ++j) {
                if (A[t][j] % int64_t(q) == 0) { A[t][j] = 0; continue; }
                int64_t c = A[t][j] / piv;
                for (size_t i = 0; i < m; ++i)
                    A[i][j] = ((A[i][j] - c * A[i][t]) % int64_t(q) + q) % q;
                for (size_t i = 0; i < ngens; ++i)
                    V[i][j] = ((V[i][j] - c * V[i][t]) % int64_t(q) + q) % q;
            }
        }
        Local L;
        for (size_t j = 0; j < nc; ++j) {
            int64_t d = (j < m) ? A[j][j] : 0;
            // cyclic factor (Z/q)/(d) has order gcd(d, q), with gcd(0, q) = q
            uint64_t ord = std::gcd(uint64_t(((d % int64_t(q)) + q) % q), q);
            if (ord <= 1) continue;
            L.facs.push_back(ord);
            std::vector<int64_t> gen(ngens);
            for (size_t i = 0; i < ngens; ++i) gen[i] = V[i][j];
            L.gens.push_back(std::move(gen));
        }
        // sort ascending by order
        std::vector<size_t> idx(L.facs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return L.facs[x] < L.facs[y]; });
        Local LS;
        for (auto i : idx) { LS.facs.push_back(L.facs[i]); LS.gens.push_back(L.gens[i]); }
        locals.push_back(std::move(LS));
    }
    // CRT merge, aligning largest-with-largest
    size_t maxlen = 0;
    for (auto& L : locals) maxlen = std::max(maxlen, L.facs.size());
    AbGroupStructure out;
    for (size_t k = 0; k < maxlen; ++k) {
        uint64_t d = 1;
        std::vector<int64_t> gen(ngens, 0);
        for (size_t li = 0; li < locals.size(); ++li) {
            auto& L = locals[li];
            size_t pos = L.facs.size() >= maxlen - k ? L.facs.size() - (maxlen - k) : SIZE_MAX;
            if (pos == SIZE_MAX) continue;
            uint64_t q = pp[li].first;
            d *= L.facs[pos];
            // CRT coefficient: 1 mod q, 0 mod other prime powers
            uint64_t rest = N / q;
            int64_t x, y;
            xgcd(int64_t(rest % q), int64_t(q), x, y);
            int64_t coeff = (int64_t(rest) % int64_t(N)) * (((x % int64_t(q)) + q) % q) % int64_t(N);
            for (uint64_t i = 0; i < ngens; ++i)
                gen[i] = (gen[i] + coeff * L.gens[pos][i]) % int64_t(N);
        }
        if (d > 1) {
            out.invariant_factors.push_back(d);
            for (auto& v : gen) v = ((v % int64_t(N)) + N) % N;
            out.generators.push_back(std::move(gen));
        }
    }
    // ascending divisibility order: smallest first
    return out;
}

AbGroupStructure subquotient(const SparseMatrix& d_n, const SparseMatrix& d_nm1) {
    if (!d_n.modulus || d_n.modulus != d_nm1.modulus)
        throw std::invalid_argument("subquotient: matching modulus > 0 required");
    if (d_n.cols != d_nm1.rows)
        throw std::invalid_argument("subquotient: dimension mismatch");
    uint64_t N = d_n.modulus;
    // check composition is zero on basis vectors
    {
        std::map<uint64_t, std::vector<std::pair<uint64_t, int64_t>>> dn_cols, dm_cols;
        for (auto& [r, c, v] : d_n.entries) dn_cols[c].emplace_back(r, v);
        for (auto& [r, c, v] : d_nm1.entries) dm_cols[c].emplace_back(r, v);
        for (auto& [c, col] : dm_cols) {
            std::map<uint64_t, int64_t> acc;
            for (auto& [mid, v] : col)
                if (auto it = dn_cols.find(mid); it != dn_cols.end())
                    for (auto& [r, w] : it->second)
                        acc[r] = (acc[r] + v * w) % int64_t(N);
            for (auto& [r, v] : acc)
                if (((v % int64_t(N)) + N) % N != 0)
                    throw std::runtime_error("CompositionNonzero: d_n * d_{n-1} != 0");
        }
    }
    // kernel of d_n: echelon of [d_n^T | I]
    ZnEchelon E(d_n.rows, d_n.cols, N);
    {
        std::map<uint64_t, ZnEchelon::Row> cols;
        for (auto& [r, c, v] : d_n.entries) cols[c].emplace_back(r, v);
        for (uint64_t c = 0; c < d_n.cols; ++c) {
            auto it = cols.find(c);
            E.add_tagged(it == cols.end() ? ZnEchelon::Row{} : it->second, c);
        }
    }
    auto ker = E.null_tails();   // rows over d_n.cols coordinates
    // echelon of kernel gens with tags for coordinates
    ZnEchelon KE(d_n.cols, ker.size(), N);
    for (size_t i = 0; i < ker.size(); ++i) KE.add_tagged(ker[i], i);
    // express image columns over kernel gens
    std::vector<std::vector<std::pair<uint64_t, int64_t>>> rels;
    {
        std::map<uint64_t, ZnEchelon::Row> cols;
        for (auto& [r, c, v] : d_nm1.entries) cols[c].emplace_back(r, v);
        for (auto& [c, col] : cols) {
            auto res = KE.reduce(col);
            std::vector<std::pair<uint64_t, int64_t>> coords;
            for (auto& [cc, v] : res) {
                if (cc < d_n.cols) throw std::runtime_error("subquotient: image not in kernel");
                coords.emplace_back(cc - d_n.cols, (int64_t(N) - v) % int64_t(N));
            }
            if (!coords.empty()) rels.push_back(std::move(coords));
        }
    }
    auto st = quotient_structure(rels, ker.size(), N);
    // map generator coordinates back to ambient space
    AbGroupStructure out;
    out.invariant_factors = st.invariant_factors;
    for (auto& g : st.generators) {
        std::vector<int64_t> amb(d_n.cols, 0);
        for (size_t i = 0; i < g.size(); ++i) {
            if (g[i] % int64_t(N) == 0) continue;
            for (auto& [c, v] : ker[i])
                amb[c] = (amb[c] + g[i] * v) % int64_t(N);
        }
        for (auto& v : amb) v = ((v % int64_t(N)) + N) % N;
        out.generators.push_back(std::move(amb));
    }
    return out;
}

}  // namespace sucoh::linalg
