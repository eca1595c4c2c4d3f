#include "sally/reducer.hpp"

#include "sally/errors.hpp"

namespace sally {

Reducer::Reducer(std::span<const Poly> polys) {
    entries_.reserve(polys.size());
    for (const Poly& p : polys) add(p);
}

void Reducer::add(const Poly& p) {
    if (p.is_zero()) return;
    entries_.push_back({&p, p.leading_monomial(), p.leading_monomial().support_mask(),
                        p.ring().field.inverse(p.leading_coeff())});
}

std::optional<std::size_t> Reducer::find_divisor(const Monomial& m) const noexcept {
    const std::uint32_t mask = m.support_mask();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Entry& e = entries_[i];
        if ((e.mask & ~mask) != 0) continue;
        if (e.lead.divides(m)) return i;
    }
    return std::nullopt;
}

Poly Reducer::reduce(const Poly& f) const {
    if (f.is_zero() || entries_.empty()) return f;
    const PolyRing& ring = f.ring();
    const PrimeField& field = ring.field;
    const MonomialOrder& order = ring.order;

    std::vector<Term> cur(f.terms().begin(), f.terms().end());
    std::vector<Term> next;
    std::vector<Term> out;
    std::size_t pos = 0;
    while (pos < cur.size()) {
        auto idx = find_divisor(cur[pos].mono);
        if (!idx) {
            out.push_back(cur[pos++]);
            continue;
        }
        const Entry& e = entries_[*idx];
        const Monomial shift = cur[pos].mono / e.lead;
        const Coeff c = field.mul(cur[pos].coeff, e.lead_inverse);
        auto g = e.poly->terms();

        // next = cur[pos+1..] - c * shift * g[1..]
        next.clear();
        next.reserve(cur.size() - pos + g.size());
        std::size_t i = pos + 1, j = 1;
        while (i < cur.size() && j < g.size()) {
            Monomial gm = g[j].mono * shift;
            auto cmp = order.compare_unchecked(cur[i].mono, gm);
            if (cmp == std::strong_ordering::greater) {
                next.push_back(cur[i++]);
            } else if (cmp == std::strong_ordering::less) {
                next.push_back({gm, field.neg(field.mul(c, g[j].coeff))});
                ++j;
            } else {
                Coeff v = field.sub(cur[i].coeff, field.mul(c, g[j].coeff));
                if (v != 0) next.push_back({gm, v});
                ++i;
                ++j;
            }
        }
        for (; i < cur.size(); ++i) next.push_back(cur[i]);
        for (; j < g.size(); ++j) next.push_back({g[j].mono * shift, field.neg(field.mul(c, g[j].coeff))});
        cur.swap(next);
        pos = 0;
    }
    return Poly::from_canonical(f.ring_ptr(), std::move(out));
}

}  // namespace sally
