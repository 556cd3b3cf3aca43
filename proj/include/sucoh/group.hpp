#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace sucoh {

using elem_t = uint32_t;   // element index, 0 = identity
using tup_t = uint64_t;    // index into Gbar^q (nonidentity tuples)

/* Finite abelian group as a product of cyclic factors.
 * Elements are mixed-radix codes over the factor orders; index 0 is the identity.
 * Multiplication goes through a small precomputed table. */
class FinAbGroup {
  public:
    explicit FinAbGroup(std::vector<uint32_t> orders);

    const std::vector<uint32_t>& orders() const { return orders_; }
    uint32_t order() const { return n_; }
    uint32_t nbar() const { return n_ - 1; }
    size_t rank() const { return orders_.size(); }

    elem_t mul(elem_t a, elem_t b) const { return mul_[a * n_ + b]; }
    elem_t inv(elem_t a) const { return inv_[a]; }
    std::vector<uint32_t> coords(elem_t a) const;
    elem_t from_coords(const std::vector<uint32_t>& c) const;
    elem_t generator(size_t i) const;   // e_i

    uint32_t exponent() const;
    std::string name() const;           // "Z4xZ2"

    bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }

    // number of tuples in Gbar^q (1 for q = 0)
    uint64_t tuples(int q) const;
    void tuple_of(int q, tup_t idx, elem_t* out) const;
    tup_t index_of(int q, const elem_t* t) const;

  private:
    std::vector<uint32_t> orders_;
    uint32_t n_;
    std::vector<elem_t> mul_, inv_;
};

/* Homomorphism between finite abelian groups, stored as generator images.
 * Well-definedness (order(e_i) * image = 0) is checked at construction. */
class GroupHom {
  public:
    GroupHom(const FinAbGroup& dom, const FinAbGroup& cod, std::vector<elem_t> gen_images);

    const FinAbGroup& domain() const { return *dom_; }
    const FinAbGroup& codomain() const { return *cod_; }
    elem_t map(elem_t x) const { return tab_[x]; }

    bool is_injective() const;
    bool is_surjective() const;
    static GroupHom identity(const FinAbGroup& G);
    GroupHom compose(const GroupHom& inner) const;   // this o inner

  private:
    const FinAbGroup* dom_;
    const FinAbGroup* cod_;
    std::vector<elem_t> images_;
    std::vector<elem_t> tab_;
};

FinAbGroup parse_group(const std::string& spec);   // "Z4", "Z2xZ8"

}  // namespace sucoh
