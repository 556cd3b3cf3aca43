#pragma once
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "sucoh/cochain.hpp"
#include "sucoh/group.hpp"
#include "sucoh/linalg.hpp"

namespace sucoh {

struct BudgetExceeded : std::runtime_error {
    uint64_t dimension;
    explicit BudgetExceeded(uint64_t dim)
        : std::runtime_error("BudgetExceeded: cochain dimension " + std::to_string(dim)), dimension(dim) {}
};

struct Budget {
    uint64_t max_dimension = 200'000'000;   // entries in one cochain space
    void check(uint64_t dim) const {
        if (dim > max_dimension) throw BudgetExceeded(dim);
    }
};

/* Cached linear algebra for the (possibly twisted) bar complex of G mod N.
 * Holds echelons of differential images with preimage tracking, per degree. */
class BarComplex {
  public:
    BarComplex(const FinAbGroup& G, uint64_t N, std::vector<uint8_t> twist_bits, Budget budget = {});

    const FinAbGroup& group() const { return *G_; }
    uint64_t modulus() const { return N_; }
    const std::vector<uint8_t>& twist() const { return tw_; }

    // echelon of [d^T | I] for d: C^q -> C^{q+1}; memoized
    const linalg::ZnEchelon& image_echelon(int q);

    // solve d x = target (+ optional extra columns with coefficients); nullopt if none
    std::optional<BarCochain> solve_d(const BarCochain& target);
    std::optional<std::pair<BarCochain, std::vector<int64_t>>> solve_d_extra(
        const BarCochain& target, const std::vector<const BarCochain*>& extra);
    bool is_exact(const BarCochain& target);

    // cocycle representatives of a basis of H^q
    std::vector<BarCochain> h_basis(int q);

    // full cohomology structure in degree q
    linalg::AbGroupStructure cohomology(int q);

    BarCochain d(const BarCochain& c) const { return differential(c, tw_); }

  private:
    const FinAbGroup* G_;
    uint64_t N_;
    std::vector<uint8_t> tw_;
    Budget budget_;
    std::vector<std::unique_ptr<linalg::ZnEchelon>> ech_;
    linalg::ZnEchelon::Row to_row(const BarCochain& c) const;
    BarCochain from_tail(const linalg::ZnEchelon::Row& r, int q, bool negate) const;
};

/* spec surface: cohomology of BG with coefficients (twisted bar complex). */
linalg::AbGroupStructure cohomology(const FinAbGroup& G, const Coefficients& coeff, int degree,
                                    Budget budget = {});

}  // namespace sucoh
