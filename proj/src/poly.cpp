#include "sally/poly.hpp"

#include <algorithm>

#include "sally/errors.hpp"

namespace sally {

PolyRingPtr make_poly_ring(std::vector<std::string> names, std::uint32_t prime, MonomialOrder order) {
    if (names.empty()) throw StructuralError("a polynomial ring needs at least one variable");
    if (names.size() > kMaxVars) throw StructuralError("too many variables");
    return std::make_shared<const PolyRing>(PolyRing{PrimeField(prime), std::move(names), order});
}

Poly Poly::from_terms(PolyRingPtr ring, std::vector<Term> terms) {
    const PolyRing& r = *ring;
    for (const Term& t : terms)
        if (t.mono.nvars() != r.nvars()) throw StructuralError("term has wrong number of variables");
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return r.order.greater(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (const Term& t : terms) {
        Coeff c = t.coeff % r.field.modulus();
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = r.field.add(out.back().coeff, c);
        } else {
            if (!out.empty() && out.back().coeff == 0) out.pop_back();
            out.push_back({t.mono, c});
        }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    return Poly(std::move(ring), std::move(out));
}

Poly Poly::constant(PolyRingPtr ring, std::int64_t c) {
    Coeff v = ring->field.from_int(c);
    Monomial one(ring->nvars());
    if (v == 0) return Poly(std::move(ring));
    return Poly(std::move(ring), std::vector<Term>{{one, v}});
}

Poly Poly::monomial(PolyRingPtr ring, const Monomial& m, Coeff c) {
    if (m.nvars() != ring->nvars()) throw StructuralError("monomial has wrong number of variables");
    c %= ring->field.modulus();
    if (c == 0) return Poly(std::move(ring));
    return Poly(std::move(ring), std::vector<Term>{{m, c}});
}

Poly Poly::variable(PolyRingPtr ring, std::size_t index) {
    Monomial m = Monomial::variable(ring->nvars(), index);
    return monomial(std::move(ring), m, 1);
}

int Poly::degree() const noexcept {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Poly::is_homogeneous() const noexcept {
    for (const Term& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

void Poly::require_compatible(const Poly& other) const {
    if (!ring_ || !other.ring_) throw StructuralError("polynomial without a ring");
    if (ring_ != other.ring_ && !ring_->compatible(*other.ring_))
        throw StructuralError("polynomials live in different rings (modulus, order or variable count differ)");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = ring_->field.neg(t.coeff);
    return r;
}

namespace {

// a + sign * b by merging two sorted term lists.
std::vector<Term> merge(const PolyRing& r, std::span<const Term> a, std::span<const Term> b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const PrimeField& f = r.field;
    while (i < a.size() && j < b.size()) {
        auto cmp = r.order.compare_unchecked(a[i].mono, b[j].mono);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({b[j].mono, subtract ? f.neg(b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Coeff c = subtract ? f.sub(a[i].coeff, b[j].coeff) : f.add(a[i].coeff, b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, c});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? f.neg(b[j].coeff) : b[j].coeff});
    return out;
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    a.require_compatible(b);
    return Poly(a.ring_, merge(*a.ring_, a.terms_, b.terms_, false));
}

Poly operator-(const Poly& a, const Poly& b) {
    a.require_compatible(b);
    return Poly(a.ring_, merge(*a.ring_, a.terms_, b.terms_, true));
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_compatible(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    const PrimeField& f = a.ring_->field;
    for (const Term& s : a.terms_)
        for (const Term& t : b.terms_) prod.push_back({s.mono * t.mono, f.mul(s.coeff, t.coeff)});
    return Poly::from_terms(a.ring_, std::move(prod));
}

Poly Poly::scaled(Coeff c) const {
    c %= ring_->field.modulus();
    if (c == 0) return Poly(ring_);
    Poly r = *this;
    for (Term& t : r.terms_) t.coeff = ring_->field.mul(t.coeff, c);
    return r;
}

Poly Poly::times(const Monomial& m, Coeff c) const {
    c %= ring_->field.modulus();
    if (c == 0) return Poly(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back({t.mono * m, ring_->field.mul(t.coeff, c)});
    return Poly(ring_, std::move(out));
}

Poly Poly::monic() const {
    if (is_zero() || leading_coeff() == 1) return *this;
    return scaled(ring_->field.inverse(leading_coeff()));
}

Poly Poly::sub_mul(Coeff c, const Monomial& m, const Poly& g) const {
    const PolyRing& r = *ring_;
    const PrimeField& f = r.field;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    const auto& a = terms_;
    const auto& b = g.terms_;
    while (i < a.size() && j < b.size()) {
        Monomial bm = b[j].mono * m;
        auto cmp = r.order.compare_unchecked(a[i].mono, bm);
        while (cmp == std::strong_ordering::greater) {
            out.push_back(a[i++]);
            if (i == a.size()) break;
            cmp = r.order.compare_unchecked(a[i].mono, bm);
        }
        if (i < a.size() && cmp == std::strong_ordering::equal) {
            Coeff v = f.sub(a[i].coeff, f.mul(c, b[j].coeff));
            if (v != 0) out.push_back({bm, v});
            ++i;
        } else {
            out.push_back({bm, f.neg(f.mul(c, b[j].coeff))});
        }
        ++j;
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono * m, f.neg(f.mul(c, b[j].coeff))});
    return Poly(ring_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    if (a.ring_ && b.ring_ && a.ring_ != b.ring_ && !a.ring_->compatible(*b.ring_)) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) return false;
    return true;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    const PrimeField& f = ring_->field;
    for (const Term& t : terms_) {
        std::int64_t c = f.to_signed(t.coeff);
        bool neg = c < 0;
        std::int64_t mag = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (t.mono.is_one()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += t.mono.to_string(ring_->names);
        }
    }
    return out;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    const PrimeField& f = b.ring().field;
    Coeff inv = f.inverse(b.leading_coeff());
    Poly rem = a;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!b.leading_monomial().divides(lm)) throw StructuralError("polynomial division is not exact");
        Monomial q = lm / b.leading_monomial();
        Coeff c = f.mul(rem.leading_coeff(), inv);
        quot.push_back({q, c});
        rem = rem.sub_mul(c, q, b);
    }
    return Poly::from_terms(a.ring_ptr(), std::move(quot));
}

}  // namespace sally
