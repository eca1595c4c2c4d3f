#include "sally/ideal.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "sally/errors.hpp"

namespace sally {

namespace {

void require_homogeneous(std::span<const Poly> polys, const char* what) {
    for (const Poly& p : polys)
        if (!p.is_homogeneous())
            throw StructuralError(std::string(what) + " must be homogeneous: " + p.to_string());
}

}  // namespace

RingSpecPtr RingSpec::create(PolyRingPtr ring, std::vector<Poly> defining, Backend backend) {
    if (!ring) throw StructuralError("quotient ring without a polynomial ring");
    for (const Poly& p : defining)
        if (p.ring_ptr() && !p.ring().compatible(*ring))
            throw StructuralError("defining polynomial lives in a different ring");
    require_homogeneous(defining, "defining polynomials");
    std::erase_if(defining, [](const Poly& p) { return p.is_zero(); });

    auto spec = std::shared_ptr<RingSpec>(new RingSpec());
    spec->ring_ = std::move(ring);
    spec->defining_ = std::move(defining);
    spec->backend_ = backend;
    spec->defining_basis_ = groebner_basis(spec->defining_, backend);
    spec->dim_ = krull_dimension(*spec);
    if (spec->dim_ == 0) throw StructuralError("ring has Krull dimension 0; a positive dimension is required");
    return spec;
}

Poly RingSpec::variable(const std::string& name) const {
    auto it = std::find(ring_->names.begin(), ring_->names.end(), name);
    if (it == ring_->names.end()) throw StructuralError("unknown variable " + name);
    return Poly::variable(ring_, static_cast<std::size_t>(it - ring_->names.begin()));
}

RingSpecPtr RingSpec::with_backend(Backend backend) const {
    auto spec = std::shared_ptr<RingSpec>(new RingSpec(*this));
    spec->backend_ = backend;
    return spec;
}

std::size_t dimension_from_leads(std::span<const Monomial> leads, std::size_t nvars) {
    std::vector<std::uint32_t> masks;
    for (const Monomial& m : leads) {
        if (m.is_one()) throw StructuralError("zero ring: the defining ideal is the unit ideal");
        masks.push_back(m.support_mask());
    }
    auto independent = [&](std::uint32_t set) {
        return std::all_of(masks.begin(), masks.end(), [&](std::uint32_t l) { return (l & ~set) != 0; });
    };
    std::size_t best = 0;
    std::function<void(std::size_t, std::uint32_t, std::size_t)> search = [&](std::size_t idx, std::uint32_t set,
                                                                              std::size_t count) {
        if (count + (nvars - idx) <= best) return;
        if (idx == nvars) {
            best = count;
            return;
        }
        std::uint32_t with = set | (1u << idx);
        if (independent(with)) search(idx + 1, with, count + 1);
        search(idx + 1, set, count);
    };
    search(0, 0, 0);
    return best;
}

std::size_t krull_dimension(const RingSpec& ring) {
    std::vector<Monomial> leads;
    for (const Poly& g : ring.defining_basis()) leads.push_back(g.leading_monomial());
    return dimension_from_leads(leads, ring.nvars());
}

IdealHandle::IdealHandle(RingSpecPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw StructuralError("ideal without ring");
    for (const Poly& g : gens)
        if (g.ring_ptr() && !g.ring().compatible(*ring_->poly_ring()))
            throw StructuralError("generator lives in a different ring");
    require_homogeneous(gens, "ideal generators");
    std::erase_if(gens, [](const Poly& p) { return p.is_zero(); });
    gens_ = std::move(gens);
}

IdealHandle IdealHandle::unit(RingSpecPtr ring) {
    auto one = Poly::constant(ring->poly_ring(), 1);
    return IdealHandle(std::move(ring), {one});
}

IdealHandle IdealHandle::zero(RingSpecPtr ring) { return IdealHandle(std::move(ring), {}); }

IdealHandle IdealHandle::maximal(RingSpecPtr ring) {
    std::vector<Poly> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
    return IdealHandle(std::move(ring), std::move(vars));
}

const IdealHandle::Cache& IdealHandle::cache() const {
    std::call_once(cache_->once, [this] {
        std::vector<Poly> all(ring_->defining_basis().begin(), ring_->defining_basis().end());
        all.insert(all.end(), gens_.begin(), gens_.end());
        cache_->gb = groebner_basis(all, ring_->backend());
        cache_->reducer = Reducer(cache_->gb);
    });
    return *cache_;
}

void IdealHandle::seed_basis(std::vector<Poly> gb) const {
    std::call_once(cache_->once, [&] {
        cache_->gb = std::move(gb);
        cache_->reducer = Reducer(cache_->gb);
    });
}

std::span<const Poly> IdealHandle::gb() const { return cache().gb; }

std::vector<Monomial> IdealHandle::leading_monomials() const {
    std::vector<Monomial> out;
    for (const Poly& g : gb()) out.push_back(g.leading_monomial());
    return out;
}

bool IdealHandle::is_unit() const {
    auto basis = gb();
    return basis.size() == 1 && basis.front().leading_monomial().is_one();
}

Poly IdealHandle::normal_form(const Poly& f) const { return cache().reducer.reduce(f); }

bool IdealHandle::contains(const Poly& f) const { return normal_form(f).is_zero(); }

bool IdealHandle::contains(const IdealHandle& other) const {
    require_same_ring(*this, other);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains(g); });
}

std::string IdealHandle::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

void require_same_ring(const IdealHandle& a, const IdealHandle& b) {
    if (a.ring_ptr() == b.ring_ptr()) return;
    const RingSpec& ra = a.ring();
    const RingSpec& rb = b.ring();
    if (!ra.poly_ring()->compatible(*rb.poly_ring()) || !same_basis(ra.defining_basis(), rb.defining_basis()))
        throw StructuralError("ideals live in different rings");
}

IdealHandle ideal_combine(const IdealHandle& a, const IdealHandle& b, CombineOp op) {
    require_same_ring(a, b);
    std::vector<Poly> gens;
    if (op == CombineOp::sum) {
        gens.assign(a.gens().begin(), a.gens().end());
        gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    } else {
        for (const Poly& f : a.gens())
            for (const Poly& g : b.gens()) gens.push_back(f * g);
        gens = interreduce(gens, a.ring().defining_basis(), a.ring().backend());
    }
    return IdealHandle(a.ring_ptr(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& a, unsigned n) {
    if (n == 0) return IdealHandle::unit(a.ring_ptr());
    IdealHandle p = a;
    for (unsigned k = 1; k < n; ++k) p = ideal_product(p, a);
    return p;
}

IdealHandle ideal_adjoin(const IdealHandle& a, const Poly& f) {
    std::vector<Poly> gens(a.gens().begin(), a.gens().end());
    gens.push_back(f);
    return IdealHandle(a.ring_ptr(), std::move(gens));
}

namespace {

struct EliminationRing {
    PolyRingPtr base;
    PolyRingPtr extended;

    explicit EliminationRing(const PolyRingPtr& b) : base(b) {
        std::vector<std::string> names{"_t"};
        names.insert(names.end(), b->names.begin(), b->names.end());
        extended = make_poly_ring(std::move(names), b->field.modulus(), MonomialOrder::elimination(1));
    }

    Poly lift(const Poly& f, unsigned t_power) const {
        std::vector<Term> terms;
        terms.reserve(f.size());
        const std::size_t n = extended->nvars();
        for (const Term& t : f.terms()) {
            Monomial m(n);
            m.set(0, t_power);
            for (std::size_t i = 1; i < n; ++i) m.set(i, t.mono[i - 1]);
            terms.push_back({m, t.coeff});
        }
        return Poly::from_terms(extended, std::move(terms));
    }

    Poly drop(const Poly& f) const {
        std::vector<Term> terms;
        const std::size_t n = base->nvars();
        for (const Term& t : f.terms()) {
            Monomial m(n);
            for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i + 1]);
            terms.push_back({m, t.coeff});
        }
        return Poly::from_terms(base, std::move(terms));
    }
};

// Generators of (a intersect b) in the ambient ring; `a` and `b` are any
// generating sets. The result is the reduced basis of the intersection for
// grevlex restricted to the original variables.
std::vector<Poly> intersect_ambient(std::span<const Poly> a, std::span<const Poly> b, const PolyRingPtr& ring,
                                    Backend backend) {
    EliminationRing er(ring);
    std::vector<Poly> gens;
    for (const Poly& f : a) gens.push_back(er.lift(f, 1));
    for (const Poly& g : b) gens.push_back(er.lift(g, 0) - er.lift(g, 1));
    std::vector<Poly> basis = groebner_basis(gens, backend);
    std::vector<Poly> out;
    for (const Poly& g : basis)
        if (g.leading_monomial()[0] == 0) out.push_back(er.drop(g));
    return out;
}

}  // namespace

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    const RingSpec& ring = a.ring();
    std::vector<Poly> gens = intersect_ambient(a.gb(), b.gb(), ring.poly_ring(), ring.backend());
    IdealHandle result(a.ring_ptr(), gens);
    if (ring.poly_ring()->order == MonomialOrder::grevlex()) result.seed_basis(std::move(gens));
    return result;
}

QuotientResult ideal_quotient(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    const RingSpec& ring = a.ring();
    std::vector<Poly> divisors;
    bool zero = true;
    Reducer modulo_defining(ring.defining_basis());
    for (const Poly& h : b.gens()) {
        Poly hr = modulo_defining.reduce(h);
        if (hr.is_zero()) continue;
        zero = false;
        if (!a.contains(hr)) divisors.push_back(hr);
    }
    if (zero) return {IdealHandle::unit(a.ring_ptr()), true};

    std::optional<IdealHandle> acc;
    for (const Poly& h : divisors) {
        std::vector<Poly> meet = intersect_ambient(a.gb(), std::span<const Poly>(&h, 1), ring.poly_ring(),
                                                   ring.backend());
        std::vector<Poly> quotients;
        quotients.reserve(meet.size());
        for (const Poly& g : meet) quotients.push_back(divide_exact(g, h));
        IdealHandle colon(a.ring_ptr(), std::move(quotients));
        acc = acc ? ideal_intersect(*acc, colon) : colon;
    }
    if (!acc) return {IdealHandle::unit(a.ring_ptr()), false};
    return {*acc, false};
}

bool ideal_equal(const IdealHandle& a, const IdealHandle& b) {
    require_same_ring(a, b);
    return same_basis(a.gb(), b.gb());
}

}  // namespace sally
