#include "sucoh/cochain.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sucoh {

BarCochain::BarCochain(const FinAbGroup& G, int degree, uint64_t modulus)
    : G_(&G), q_(degree), N_(modulus) {
    if (degree < 0) throw std::invalid_argument("negative cochain degree");
    vals_.assign(G.tuples(degree), 0);
}

int64_t BarCochain::value(const elem_t* t) const {
    if (q_ == 0) return vals_[0];
    for (int i = 0; i < q_; ++i)
        if (t[i] == 0) return 0;
    return vals_[G_->index_of(q_, t)];
}

void BarCochain::set(tup_t idx, int64_t v) {
    v %= int64_t(N_);
    if (v < 0) v += int64_t(N_);
    vals_[idx] = int32_t(v);
}

bool BarCochain::is_zero() const {
    for (auto v : vals_) if (v) return false;
    return true;
}

BarCochain BarCochain::operator+(const BarCochain& o) const {
    BarCochain r(*G_, q_, N_);
    for (size_t i = 0; i < vals_.size(); ++i)
        r.vals_[i] = int32_t((int64_t(vals_[i]) + o.vals_[i]) % int64_t(N_));
    return r;
}

BarCochain BarCochain::operator-(const BarCochain& o) const {
    BarCochain r(*G_, q_, N_);
    for (size_t i = 0; i < vals_.size(); ++i)
        r.vals_[i] = int32_t(((int64_t(vals_[i]) - o.vals_[i]) % int64_t(N_) + int64_t(N_)) % int64_t(N_));
    return r;
}

BarCochain BarCochain::scaled(int64_t k) const {
    BarCochain r(*G_, q_, N_);
    k %= int64_t(N_);
    if (k < 0) k += int64_t(N_);
    for (size_t i = 0; i < vals_.size(); ++i)
        r.vals_[i] = int32_t((int64_t(vals_[i]) * k) % int64_t(N_));
    return r;
}

bool BarCochain::operator==(const BarCochain& o) const {
    return q_ == o.q_ && N_ == o.N_ && vals_ == o.vals_;
}

int s_of(const FinAbGroup& G, const std::vector<uint8_t>& bits, elem_t g) {
    if (bits.empty()) return 0;
    auto c = G.coords(g);
    int s = 0;
    for (size_t i = 0; i < c.size() && i < bits.size(); ++i) s += int(bits[i]) * int(c[i]);
    return s & 1;
}

BarCochain differential(const BarCochain& c, const std::vector<uint8_t>& twist_bits) {
    const FinAbGroup& G = c.group();
    int q = c.degree();
    int64_t N = int64_t(c.modulus());
    BarCochain out(G, q + 1, c.modulus());
    bool tw = false;
    for (auto b : twist_bits) if (b) tw = true;
    uint64_t nt = G.tuples(q + 1);
    std::vector<elem_t> t(q + 1), tt(std::max(q, 1));
    for (tup_t idx = 0; idx < nt; ++idx) {
        G.tuple_of(q + 1, idx, t.data());
        int64_t acc = 0;
        // leading face
        {
            int64_t v = c.value(t.data() + 1);
            if (tw && s_of(G, twist_bits, t[0])) v = -v;
            acc += v;
        }
        int64_t sign = -1;
        for (int i = 0; i < q; ++i) {
            for (int k = 0; k < i; ++k) tt[k] = t[k];
            tt[i] = G.mul(t[i], t[i + 1]);
            for (int k = i + 1; k < q; ++k) tt[k] = t[k + 1];
            acc += sign * c.value(tt.data());
            sign = -sign;
        }
        acc += sign * c.value(t.data());   // trailing face
        acc %= N;
        if (acc < 0) acc += N;
        out.values()[idx] = int32_t(acc);
    }
    return out;
}

// ------------------------------------------------------------------- cup_i

namespace {

struct Diagram {
    std::vector<uint8_t> A, B;   // vertex index lists
};

const std::vector<Diagram>& diagrams(int p, int q, int i) {
    static std::map<std::tuple<int, int, int>, std::vector<Diagram>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_tuple(p, q, i);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Diagram> out;
    if (i >= 0 && i <= std::min(p, q)) {
        int m = p + q - i;
        // block boundaries 0 <= a_0 <= ... <= a_i <= m; blocks share endpoints
        std::vector<int> a(i + 1, 0);
        for (;;) {
            std::vector<uint8_t> A, B;
            std::vector<char> inA(m + 1, 0), inB(m + 1, 0);
            int prev = 0;
            for (int k = 0; k <= i + 1; ++k) {
                int lo = (k == 0) ? 0 : a[k - 1];
                int hi = (k == i + 1) ? m : a[k];
                for (int v = lo; v <= hi; ++v)
                    ((k % 2 == 0) ? inA : inB)[v] = 1;
                prev = hi;
            }
            (void)prev;
            for (int v = 0; v <= m; ++v) {
                if (inA[v]) A.push_back(uint8_t(v));
                if (inB[v]) B.push_back(uint8_t(v));
            }
            if (int(A.size()) == p + 1 && int(B.size()) == q + 1)
                out.push_back({std::move(A), std::move(B)});
            // next boundary tuple
            int k = i;
            while (k >= 0 && a[k] == m) --k;
            if (k < 0) break;
            ++a[k];
            for (int j = k + 1; j <= i; ++j) a[j] = a[k];
        }
    }
    auto& slot = cache[key];
    slot = std::move(out);
    return slot;
}

}  // namespace

static BarCochain cup_impl(const BarCochain& x, const BarCochain& y, int i, uint64_t out_mod,
                           const std::function<int64_t(int64_t, int64_t)>* pair) {
    const FinAbGroup& G = x.group();
    int p = x.degree(), q = y.degree();
    int outq = p + q - i;
    if (i < 0 || i > std::min(p, q) || outq < 0)
        return BarCochain(G, std::max(outq, 0), out_mod);
    BarCochain out(G, outq, out_mod);
    const auto& ds = diagrams(p, q, i);
    uint64_t nt = G.tuples(outq);
    int m = outq;
    std::vector<elem_t> t(std::max(m, 1)), vert(m + 1), sub(std::max(std::max(p, q), 1));
    int64_t NO = int64_t(out_mod);
    for (tup_t idx = 0; idx < nt; ++idx) {
        if (m > 0) G.tuple_of(m, idx, t.data());
        // vertex partial products
        vert[0] = 0;
        for (int k = 1; k <= m; ++k) vert[k] = G.mul(vert[k - 1], t[k - 1]);
        int64_t acc = 0;
        for (const auto& d : ds) {
            // x on sub-simplex A
            int64_t xv;
            {
                bool degen = false;
                for (size_t k = 1; k < d.A.size(); ++k) {
                    elem_t g = G.mul(G.inv(vert[d.A[k - 1]]), vert[d.A[k]]);
                    if (g == 0) { degen = true; break; }
                    sub[k - 1] = g;
                }
                xv = degen ? 0 : (p == 0 ? x.value(nullptr) : x.value(sub.data()));
            }
            if (xv == 0) continue;
            int64_t yv;
            {
                bool degen = false;
                for (size_t k = 1; k < d.B.size(); ++k) {
                    elem_t g = G.mul(G.inv(vert[d.B[k - 1]]), vert[d.B[k]]);
                    if (g == 0) { degen = true; break; }
                    sub[k - 1] = g;
                }
                yv = degen ? 0 : (q == 0 ? y.value(nullptr) : y.value(sub.data()));
            }
            if (yv == 0) continue;
            acc += pair ? (*pair)(xv, yv) : xv * yv;
        }
        acc %= NO;
        if (acc < 0) acc += NO;
        out.values()[idx] = int32_t(acc);
    }
    return out;
}

BarCochain cup(const BarCochain& x, const BarCochain& y) {
    if (x.modulus() != y.modulus())
        throw std::invalid_argument("IncompatiblePairing: cup of mismatched moduli");
    return cup_impl(x, y, 0, x.modulus(), nullptr);
}

BarCochain cup_i(const BarCochain& x, const BarCochain& y, int i) {
    if (x.modulus() != 2 || y.modulus() != 2)
        throw std::invalid_argument("cup_i requires mod-2 cochains");
    return cup_impl(x, y, i, 2, nullptr);
}

BarCochain pairing_cup(const BarCochain& x, const BarCochain& y, uint64_t out_modulus,
                       const std::function<int64_t(int64_t, int64_t)>& pair) {
    return cup_impl(x, y, 0, out_modulus, &pair);
}

BarCochain P1(const BarCochain& x) {
    int p = x.degree();
    return cup_i(x, x, p - 1) + cup_i(differential(x), x, p);
}

BarCochain P2(const BarCochain& x) {
    int p = x.degree();
    return cup_i(x, x, p - 2) + cup_i(differential(x), x, p - 1);
}

BarCochain sq(const BarCochain& x, int k) {
    int q = x.degree();
    if (k < 0 || k > q) throw std::invalid_argument("IndexOutOfRange: sq");
    return cup_i(x, x, q - k);
}

BarCochain pullback(const BarCochain& c, const GroupHom& f) {
    const FinAbGroup& H = f.domain();
    int q = c.degree();
    BarCochain out(H, q, c.modulus());
    if (q == 0) {
        out.values()[0] = c.values()[0];
        return out;
    }
    uint64_t nt = H.tuples(q);
    std::vector<elem_t> t(q), ft(q);
    for (tup_t idx = 0; idx < nt; ++idx) {
        H.tuple_of(q, idx, t.data());
        for (int i = 0; i < q; ++i) ft[i] = f.map(t[i]);
        out.values()[idx] = int32_t(c.value(ft.data()));
    }
    return out;
}

BarCochain iota_half(const BarCochain& c, uint64_t N) {
    BarCochain out(c.group(), c.degree(), N);
    int64_t h = int64_t(N / 2);
    for (size_t i = 0; i < c.values().size(); ++i)
        out.values()[i] = int32_t((int64_t(c.values()[i] & 1) * h) % int64_t(N));
    return out;
}

BarCochain iota_quarter(const BarCochain& c, uint64_t N) {
    BarCochain out(c.group(), c.degree(), N);
    int64_t h = int64_t(N / 4);
    for (size_t i = 0; i < c.values().size(); ++i)
        out.values()[i] = int32_t((int64_t(c.values()[i] & 1) * h) % int64_t(N));
    return out;
}

BarCochain zero_cochain(const FinAbGroup& G, int q, uint64_t N) {
    return BarCochain(G, std::max(q, 0), N);
}

BarCochain random_cochain(const FinAbGroup& G, int q, uint64_t N, uint64_t seed) {
    BarCochain out(G, q, N);
    uint64_t s = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    for (auto& v : out.values()) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        v = int32_t((s >> 33) % N);
    }
    return out;
}

}  // namespace sucoh
