#include "sally/groebner.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sally/errors.hpp"

namespace sally {

namespace {

struct Element {
    Poly poly;
    Monomial lead;
    unsigned sugar;
    bool active;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    unsigned sugar;
};

unsigned sugar_of(const Poly& p) { return p.is_zero() ? 0u : static_cast<unsigned>(p.degree()); }

class Buchberger {
public:
    Buchberger(PolyRingPtr ring, Backend backend) : ring_(std::move(ring)), backend_(backend) {}

    std::vector<Poly> run(std::span<const Poly> generators, GroebnerStats& stats);

private:
    void add_element(Poly p, unsigned sugar);
    void update(std::size_t h);
    Poly s_polynomial(const Pair& pr) const;
    Reducer active_reducer() const;

    PolyRingPtr ring_;
    Backend backend_;
    std::deque<Element> basis_;  // stable addresses for Reducer
    std::vector<Pair> pairs_;
    bool unit_ = false;
};

Reducer Buchberger::active_reducer() const {
    Reducer r;
    for (const Element& e : basis_)
        if (e.active) r.add(e.poly);
    return r;
}

Poly Buchberger::s_polynomial(const Pair& pr) const {
    const Element& f = basis_[pr.i];
    const Element& g = basis_[pr.j];
    // both monic
    return f.poly.times(pr.lcm / f.lead).sub_mul(1, pr.lcm / g.lead, g.poly);
}

void Buchberger::add_element(Poly p, unsigned sugar) {
    p = p.monic();
    if (p.leading_monomial().is_one()) unit_ = true;
    Monomial lead = p.leading_monomial();
    basis_.push_back({std::move(p), lead, sugar, true});
    update(basis_.size() - 1);
}

// Gebauer-Moeller installation of the new element h.
void Buchberger::update(std::size_t h) {
    const Monomial th = basis_[h].lead;
    struct Candidate {
        std::size_t g;
        Monomial lcm;
        bool coprime;
        bool keep;
    };
    std::vector<Candidate> cands;
    for (std::size_t g = 0; g < h; ++g) {
        if (!basis_[g].active) continue;
        cands.push_back({g, lcm(th, basis_[g].lead), th.coprime(basis_[g].lead), false});
    }
    // Chain criterion among new pairs: drop (h,g1) if another remaining or kept
    // candidate's lcm divides lcm(h,g1); equal lcms keep exactly one.
    for (std::size_t a = 0; a < cands.size(); ++a) {
        if (cands[a].coprime) {
            cands[a].keep = true;
            continue;
        }
        bool dominated = false;
        for (std::size_t b = 0; b < cands.size() && !dominated; ++b) {
            if (b == a) continue;
            bool considered = b > a || cands[b].keep;
            if (considered && cands[b].lcm.divides(cands[a].lcm)) dominated = true;
        }
        cands[a].keep = !dominated;
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
        if (!th.divides(p.lcm)) return false;
        return !(lcm(basis_[p.i].lead, th) == p.lcm) && !(lcm(basis_[p.j].lead, th) == p.lcm);
    });
    for (const Candidate& c : cands) {
        if (!c.keep || c.coprime) continue;
        const Element& eg = basis_[c.g];
        const Element& eh = basis_[h];
        unsigned sugar = std::max(eg.sugar - eg.lead.degree(), eh.sugar - eh.lead.degree()) + c.lcm.degree();
        pairs_.push_back({c.g, h, c.lcm, sugar});
    }
    for (std::size_t g = 0; g < h; ++g)
        if (basis_[g].active && th.divides(basis_[g].lead)) basis_[g].active = false;
}

std::vector<Poly> Buchberger::run(std::span<const Poly> generators, GroebnerStats& stats) {
    struct Pending {
        Poly poly;
        unsigned sugar;
        std::size_t order;
    };
    std::vector<Pending> pending;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (!generators[i].is_zero()) pending.push_back({generators[i], sugar_of(generators[i]), i});

    const MonomialOrder& order = ring_->order;
    while (!unit_ && (!pending.empty() || !pairs_.empty())) {
        unsigned level = std::numeric_limits<unsigned>::max();
        for (const Pending& p : pending) level = std::min(level, p.sugar);
        for (const Pair& p : pairs_) level = std::min(level, p.sugar);

        std::vector<Pair> batch_pairs;
        std::erase_if(pairs_, [&](const Pair& p) {
            if (p.sugar != level) return false;
            batch_pairs.push_back(p);
            return true;
        });
        std::sort(batch_pairs.begin(), batch_pairs.end(), [&](const Pair& a, const Pair& b) {
            auto c = order.compare_unchecked(a.lcm, b.lcm);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            return std::tie(a.i, a.j) < std::tie(b.i, b.j);
        });
        std::vector<Poly> inputs;
        std::vector<unsigned> sugars;
        for (const Pair& p : batch_pairs) {
            inputs.push_back(s_polynomial(p));
            sugars.push_back(p.sugar);
        }
        std::erase_if(pending, [&](Pending& p) {
            if (p.sugar != level) return false;
            inputs.push_back(std::move(p.poly));
            sugars.push_back(p.sugar);
            return true;
        });
        stats.pairs_considered += batch_pairs.size();
        stats.pairs_reduced += inputs.size();
        ++stats.batches;

        Reducer snapshot = active_reducer();
        std::vector<Poly> reduced = reduce_batch(inputs, snapshot, backend_);
        for (std::size_t k = 0; k < reduced.size() && !unit_; ++k) {
            if (reduced[k].is_zero()) {
                ++stats.zero_reductions;
                continue;
            }
            // Elements added earlier in this batch may still reduce it.
            Poly h = active_reducer().reduce(reduced[k]);
            if (h.is_zero()) {
                ++stats.zero_reductions;
                continue;
            }
            add_element(std::move(h), sugars[k]);
        }
    }

    if (unit_) return {Poly::constant(ring_, 1)};

    std::vector<const Element*> active;
    for (const Element& e : basis_)
        if (e.active) active.push_back(&e);
    std::vector<Poly> out;
    out.reserve(active.size());
    Reducer all = active_reducer();
    for (const Element* e : active) {
        auto terms = e->poly.terms();
        Poly tail = Poly::from_canonical(ring_, std::vector<Term>(terms.begin() + 1, terms.end()));
        Poly lead = Poly::monomial(ring_, e->lead, 1);
        out.push_back(lead + all.reduce(tail));
    }
    std::sort(out.begin(), out.end(),
              [&](const Poly& a, const Poly& b) { return order.greater(a.leading_monomial(), b.leading_monomial()); });
    return out;
}

}  // namespace

std::vector<Poly> groebner_basis(std::span<const Poly> generators, Backend backend, GroebnerStats* stats) {
    PolyRingPtr ring;
    for (const Poly& g : generators) {
        if (!g.ring_ptr()) continue;
        if (ring && ring != g.ring_ptr() && !ring->compatible(g.ring()))
            throw StructuralError("generators live in different rings");
        if (!ring) ring = g.ring_ptr();
    }
    if (!ring) return {};
    GroebnerStats local;
    Buchberger bb(ring, backend);
    auto result = bb.run(generators, stats ? *stats : local);
    return result;
}

Poly normal_form(const Poly& f, std::span<const Poly> basis) { return Reducer(basis).reduce(f); }

std::vector<Poly> interreduce(std::span<const Poly> polys, std::span<const Poly> modulus, Backend backend) {
    Reducer base(modulus);
    std::vector<Poly> first = reduce_batch(polys, base, backend);
    std::deque<Poly> kept;
    Reducer r(modulus);
    for (Poly& p : first) {
        if (p.is_zero()) continue;
        Poly q = r.reduce(p);
        if (q.is_zero()) continue;
        kept.push_back(q.monic());
        r.add(kept.back());
    }
    return {std::make_move_iterator(kept.begin()), std::make_move_iterator(kept.end())};
}

bool same_basis(std::span<const Poly> a, std::span<const Poly> b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

}  // namespace sally
