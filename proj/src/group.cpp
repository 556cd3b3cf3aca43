#include "sucoh/group.hpp"

#include <numeric>
#include <stdexcept>

namespace sucoh {

FinAbGroup::FinAbGroup(std::vector<uint32_t> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw std::invalid_argument("group needs at least one factor");
    n_ = 1;
    for (uint32_t o : orders_) {
        if (o < 2) throw std::invalid_argument("cyclic factor order must be >= 2");
        n_ *= o;
    }
    mul_.resize(size_t(n_) * n_);
    inv_.resize(n_);
    std::vector<uint32_t> ca(rank()), cb(rank()), cc(rank());
    for (elem_t a = 0; a < n_; ++a) {
        ca = coords(a);
        for (size_t i = 0; i < rank(); ++i)
            cc[i] = (orders_[i] - ca[i]) % orders_[i];
        inv_[a] = from_coords(cc);
        for (elem_t b = 0; b < n_; ++b) {
            cb = coords(b);
            for (size_t i = 0; i < rank(); ++i)
                cc[i] = (ca[i] + cb[i]) % orders_[i];
            mul_[size_t(a) * n_ + b] = from_coords(cc);
        }
    }
}

std::vector<uint32_t> FinAbGroup::coords(elem_t a) const {
    std::vector<uint32_t> c(rank());
    for (size_t i = rank(); i-- > 0;) {
        c[i] = a % orders_[i];
        a /= orders_[i];
    }
    return c;
}

elem_t FinAbGroup::from_coords(const std::vector<uint32_t>& c) const {
    elem_t a = 0;
    for (size_t i = 0; i < rank(); ++i)
        a = a * orders_[i] + (c[i] % orders_[i]);
    return a;
}

elem_t FinAbGroup::generator(size_t i) const {
    std::vector<uint32_t> c(rank(), 0);
    c[i] = 1;
    return from_coords(c);
}

uint32_t FinAbGroup::exponent() const {
    uint32_t e = 1;
    for (uint32_t o : orders_) e = std::lcm(e, o);
    return e;
}

std::string FinAbGroup::name() const {
    std::string s;
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(orders_[i]);
    }
    return s;
}

uint64_t FinAbGroup::tuples(int q) const {
    if (q <= 0) return 1;
    uint64_t t = 1;
    for (int i = 0; i < q; ++i) t *= nbar();
    return t;
}

void FinAbGroup::tuple_of(int q, tup_t idx, elem_t* out) const {
    for (int i = 0; i < q; ++i) {
        out[i] = elem_t(idx % nbar()) + 1;
        idx /= nbar();
    }
}

tup_t FinAbGroup::index_of(int q, const elem_t* t) const {
    tup_t idx = 0;
    for (int i = q; i-- > 0;)
        idx = idx * nbar() + (t[i] - 1);
    return idx;
}

GroupHom::GroupHom(const FinAbGroup& dom, const FinAbGroup& cod, std::vector<elem_t> gen_images)
    : dom_(&dom), cod_(&cod), images_(std::move(gen_images)) {
    if (images_.size() != dom.rank())
        throw std::invalid_argument("GroupHom: one image per generator required");
    for (size_t i = 0; i < images_.size(); ++i) {
        elem_t acc = 0;
        for (uint32_t k = 0; k < dom.orders()[i]; ++k) acc = cod.mul(acc, images_[i]);
        if (acc != 0)
            throw std::invalid_argument("GroupHom: generator image order incompatible");
    }
    tab_.resize(dom.order());
    for (elem_t x = 0; x < dom.order(); ++x) {
        auto c = dom.coords(x);
        elem_t y = 0;
        for (size_t i = 0; i < c.size(); ++i)
            for (uint32_t k = 0; k < c[i]; ++k) y = cod.mul(y, images_[i]);
        tab_[x] = y;
    }
}

bool GroupHom::is_injective() const {
    std::vector<char> seen(cod_->order(), 0);
    for (elem_t x = 0; x < dom_->order(); ++x) {
        if (seen[tab_[x]]) return false;
        seen[tab_[x]] = 1;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> seen(cod_->order(), 0);
    uint32_t cnt = 0;
    for (elem_t x = 0; x < dom_->order(); ++x)
        if (!seen[tab_[x]]) { seen[tab_[x]] = 1; ++cnt; }
    return cnt == cod_->order();
}

GroupHom GroupHom::identity(const FinAbGroup& G) {
    std::vector<elem_t> im(G.rank());
    for (size_t i = 0; i < G.rank(); ++i) im[i] = G.generator(i);
    return GroupHom(G, G, im);
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (!(inner.codomain() == domain()))
        throw std::invalid_argument("compose: domain mismatch");
    std::vector<elem_t> im(inner.domain().rank());
    for (size_t i = 0; i < im.size(); ++i)
        im[i] = map(inner.map(inner.domain().generator(i)));
    return GroupHom(inner.domain(), codomain(), im);
}

FinAbGroup parse_group(const std::string& spec) {
    std::vector<uint32_t> orders;
    size_t i = 0;
    while (i < spec.size()) {
        if (spec[i] == 'x' || spec[i] == 'X' || spec[i] == '*') { ++i; continue; }
        if (spec[i] != 'Z' && spec[i] != 'z')
            throw std::invalid_argument("bad group spec: " + spec);
        ++i;
        size_t j = i;
        while (j < spec.size() && isdigit(spec[j])) ++j;
        if (j == i) throw std::invalid_argument("bad group spec: " + spec);
        orders.push_back(uint32_t(std::stoul(spec.substr(i, j - i))));
        i = j;
    }
    return FinAbGroup(orders);
}

}  // namespace sucoh
