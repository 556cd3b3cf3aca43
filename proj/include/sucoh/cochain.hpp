#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sucoh/group.hpp"

namespace sucoh {

/* Coefficient system for bar cochains: Z/N values, optionally with the sign
 * action (-1)^{s(g)} of a homomorphism s: G -> Z/2 on the leading face. */
struct Coefficients {
    uint64_t modulus = 2;
    std::vector<uint8_t> twist_bits;   // one bit per group generator; empty = untwisted

    bool twisted() const {
        for (auto b : twist_bits) if (b) return true;
        return false;
    }
};

/* Normalized bar cochain: a function on Gbar^q, extended by zero on tuples
 * containing the identity. Values are stored densely, reduced mod N. */
class BarCochain {
  public:
    BarCochain(const FinAbGroup& G, int degree, uint64_t modulus);

    const FinAbGroup& group() const { return *G_; }
    int degree() const { return q_; }
    uint64_t modulus() const { return N_; }
    std::vector<int32_t>& values() { return vals_; }
    const std::vector<int32_t>& values() const { return vals_; }

    int64_t value(const elem_t* t) const;          // 0 on degenerate tuples
    void set(tup_t idx, int64_t v);
    int64_t at(tup_t idx) const { return vals_[idx]; }

    bool is_zero() const;
    BarCochain operator+(const BarCochain& o) const;
    BarCochain operator-(const BarCochain& o) const;
    BarCochain scaled(int64_t k) const;

    bool operator==(const BarCochain& o) const;

  private:
    const FinAbGroup* G_;
    int q_;
    uint64_t N_;
    std::vector<int32_t> vals_;
};

int s_of(const FinAbGroup& G, const std::vector<uint8_t>& bits, elem_t g);

/* bar differential; twist applies (-1)^{s(g1)} to the leading face */
BarCochain differential(const BarCochain& c, const std::vector<uint8_t>& twist_bits = {});

/* cup product (mod-2 or scalar mod N; front/back face formula).
 * For pairings of differently-valued cochains see pairing_cup below. */
BarCochain cup(const BarCochain& x, const BarCochain& y);

/* Steenrod cup_i (mod 2 only); 0 beyond the valid index range. */
BarCochain cup_i(const BarCochain& x, const BarCochain& y, int i);

/* cup with an arbitrary value pairing into Z/M (used for K x K^ -> Z/N) */
BarCochain pairing_cup(const BarCochain& x, const BarCochain& y, uint64_t out_modulus,
                       const std::function<int64_t(int64_t, int64_t)>& pair);

/* stabilized cochain Steenrod squares: d P^i = P^i d identically */
BarCochain P1(const BarCochain& x);
BarCochain P2(const BarCochain& x);

/* Sq^k(phi) = phi u_{q-k} phi on mod-2 cochains */
BarCochain sq(const BarCochain& x, int k);

/* pullback along f: H -> G */
BarCochain pullback(const BarCochain& c, const GroupHom& f);

/* embeddings of mod-2 cochains into Z/N */
BarCochain iota_half(const BarCochain& c, uint64_t N);      // value -> (N/2) value
BarCochain iota_quarter(const BarCochain& c, uint64_t N);   // 0/1 lift -> (N/4) value

BarCochain zero_cochain(const FinAbGroup& G, int q, uint64_t N);
BarCochain random_cochain(const FinAbGroup& G, int q, uint64_t N, uint64_t seed);

}  // namespace sucoh
