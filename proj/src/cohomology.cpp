#include "sucoh/cohomology.hpp"

namespace sucoh {

BarComplex::BarComplex(const FinAbGroup& G, uint64_t N, std::vector<uint8_t> twist_bits, Budget budget)
    : G_(&G), N_(N), tw_(std::move(twist_bits)), budget_(budget) {}

linalg::ZnEchelon::Row BarComplex::to_row(const BarCochain& c) const {
    linalg::ZnEchelon::Row r;
    const auto& v = c.values();
    for (uint64_t i = 0; i < v.size(); ++i)
        if (v[i]) r.emplace_back(i, v[i]);
    return r;
}

const linalg::ZnEchelon& BarComplex::image_echelon(int q) {
    if (q < 0) throw std::invalid_argument("image_echelon: negative degree");
    if (ech_.size() <= size_t(q)) ech_.resize(q + 1);
    if (!ech_[q]) {
        budget_.check(G_->tuples(q + 1));
        uint64_t nsrc = G_->tuples(q);
        auto E = std::make_unique<linalg::ZnEchelon>(G_->tuples(q + 1), nsrc, N_);
        BarCochain delta(*G_, q, N_);
        for (uint64_t i = 0; i < nsrc; ++i) {
            delta.values()[i] = 1;
            E->add_tagged(to_row(d(delta)), i);
            delta.values()[i] = 0;
        }
        ech_[q] = std::move(E);
    }
    return *ech_[q];
}

BarCochain BarComplex::from_tail(const linalg::ZnEchelon::Row& r, int q, bool negate) const {
    BarCochain x(*G_, q, N_);
    uint64_t main = G_->tuples(q + 1);
    for (auto& [c, v] : r) {
        if (c < main) continue;
        int64_t vv = negate ? (int64_t(N_) - v) % int64_t(N_) : v;
        x.values()[c - main] = int32_t(vv);
    }
    return x;
}

std::optional<BarCochain> BarComplex::solve_d(const BarCochain& target) {
    int q = target.degree() - 1;
    if (q < 0) return target.is_zero() ? std::optional<BarCochain>(BarCochain(*G_, 0, N_)) : std::nullopt;
    const auto& E = image_echelon(q);
    auto res = E.reduce(to_row(target));
    for (auto& [c, v] : res)
        if (c < E.main_cols()) return std::nullopt;
    return from_tail(res, q, true);
}

std::optional<std::pair<BarCochain, std::vector<int64_t>>> BarComplex::solve_d_extra(
    const BarCochain& target, const std::vector<const BarCochain*>& extra) {
    int q = target.degree() - 1;
    uint64_t main = G_->tuples(q + 1);
    uint64_t nsrc = q >= 0 ? G_->tuples(q) : 0;
    // echelon over [d-columns | extra | I]: build fresh (extra varies per call)
    linalg::ZnEchelon E(main, nsrc + extra.size(), N_);
    if (q >= 0) {
        BarCochain delta(*G_, q, N_);
        for (uint64_t i = 0; i < nsrc; ++i) {
            delta.values()[i] = 1;
            E.add_tagged(to_row(d(delta)), i);
            delta.values()[i] = 0;
        }
    }
    for (size_t j = 0; j < extra.size(); ++j)
        E.add_tagged(to_row(*extra[j]), nsrc + j);
    auto res = E.reduce(to_row(target));
    for (auto& [c, v] : res)
        if (c < main) return std::nullopt;
    BarCochain x(*G_, std::max(q, 0), N_);
    std::vector<int64_t> coeff(extra.size(), 0);
    for (auto& [c, v] : res) {
        int64_t vv = (int64_t(N_) - v) % int64_t(N_);
        if (c < main + nsrc) x.values()[c - main] = int32_t(vv);
        else coeff[c - main - nsrc] = vv;
    }
    return std::make_pair(std::move(x), std::move(coeff));
}

bool BarComplex::is_exact(const BarCochain& target) {
    int q = target.degree() - 1;
    if (q < 0) return target.is_zero();
    return image_echelon(q).member(to_row(target));
}

std::vector<BarCochain> BarComplex::h_basis(int q) {
    if (q < 0) return {};
    budget_.check(G_->tuples(q + 1));
    const auto& E = image_echelon(q);       // kernel gens live in its null tails
    auto ker = E.null_tails();
    std::vector<BarCochain> basis;
    // quotient by image from below: echelon seeded with d-image of C^{q-1}
    linalg::ZnEchelon quot(G_->tuples(q), 0, N_);
    if (q >= 1) {
        uint64_t nd = G_->tuples(q - 1);
        BarCochain delta(*G_, q - 1, N_);
        for (uint64_t i = 0; i < nd; ++i) {
            delta.values()[i] = 1;
            quot.add_row(to_row(d(delta)));
            delta.values()[i] = 0;
        }
    }
    for (auto& k : ker) {
        // k is a coordinate combination over C^q basis
        size_t before = quot.pivot_count();
        quot.add_row(k);
        if (quot.pivot_count() <= before) continue;   // reduced to zero or annihilated
        BarCochain rep(*G_, q, N_);
        for (auto& [c, v] : k) rep.values()[c] = int32_t(v);
        basis.push_back(std::move(rep));
    }
    return basis;
}

linalg::AbGroupStructure BarComplex::cohomology(int q) {
    budget_.check(G_->tuples(q + 1));
    linalg::SparseMatrix dn, dm;
    dn.modulus = dm.modulus = N_;
    dn.cols = G_->tuples(q);
    dn.rows = G_->tuples(q + 1);
    {
        BarCochain delta(*G_, q, N_);
        for (uint64_t i = 0; i < dn.cols; ++i) {
            delta.values()[i] = 1;
            auto im = d(delta);
            for (uint64_t r = 0; r < im.values().size(); ++r)
                if (im.values()[r]) dn.set(r, i, im.values()[r]);
            delta.values()[i] = 0;
        }
        dn.normalize();
    }
    dm.cols = q >= 1 ? G_->tuples(q - 1) : 0;
    dm.rows = dn.cols;
    if (q >= 1) {
        BarCochain delta(*G_, q - 1, N_);
        for (uint64_t i = 0; i < dm.cols; ++i) {
            delta.values()[i] = 1;
            auto im = d(delta);
            for (uint64_t r = 0; r < im.values().size(); ++r)
                if (im.values()[r]) dm.set(r, i, im.values()[r]);
            delta.values()[i] = 0;
        }
        dm.normalize();
    }
    return linalg::subquotient(dn, dm);
}

linalg::AbGroupStructure cohomology(const FinAbGroup& G, const Coefficients& coeff, int degree,
                                    Budget budget) {
    BarComplex C(G, coeff.modulus, coeff.twist_bits, budget);
    return C.cohomology(degree);
}

}  // namespace sucoh
