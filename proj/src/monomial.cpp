#include "sally/monomial.hpp"

#include <algorithm>

#include "sally/errors.hpp"

namespace sally {

namespace {

constexpr unsigned kMaxExponent = 255;
constexpr unsigned kMaxDegree = 65535;

void check_nvars(std::size_t nvars) {
    if (nvars > kMaxVars)
        throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_nvars(nvars); }

Monomial::Monomial(std::size_t nvars, std::initializer_list<unsigned> exponents)
    : Monomial(nvars, std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
    if (exponents.size() != nvars)
        throw StructuralError("exponent vector has length " + std::to_string(exponents.size()) + ", expected " +
                              std::to_string(nvars));
    for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
    Monomial m(nvars);
    if (index >= nvars) throw StructuralError("variable index out of range");
    m.set(index, power);
    return m;
}

void Monomial::set(std::size_t i, unsigned e) {
    if (i >= nvars_) throw StructuralError("exponent index out of range");
    if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
    unsigned deg = degree_ - exp_[i] + e;
    if (deg > kMaxDegree) throw std::overflow_error("monomial degree overflow");
    exp_[i] = static_cast<std::uint8_t>(e);
    degree_ = static_cast<std::uint16_t>(deg);
}

std::uint32_t Monomial::support_mask() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exp_[i] != 0) mask |= 1u << std::min<std::size_t>(i, 31);
    return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < nvars_; ++i)
        if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw StructuralError("monomial length mismatch");
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
        unsigned e = unsigned{a.exp_[i]} + b.exp_[i];
        if (e > kMaxExponent) throw std::overflow_error("exponent exceeds 255");
        r.exp_[i] = static_cast<std::uint8_t>(e);
    }
    unsigned deg = unsigned{a.degree_} + b.degree_;
    if (deg > kMaxDegree) throw std::overflow_error("monomial degree overflow");
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
    if (!b.divides(a)) throw StructuralError("monomial division is not exact");
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint8_t>(a.exp_[i] - b.exp_[i]);
    r.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars_ != b.nvars_) throw StructuralError("monomial length mismatch");
    Monomial r(a.nvars_);
    unsigned deg = 0;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
        r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
        deg += r.exp_[i];
    }
    r.degree_ = static_cast<std::uint16_t>(deg);
    return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    if (is_one()) return "1";
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
        if (exp_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
    }
    return out;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::lex: return "lex";
        case OrderKind::block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw StructuralError("cannot compare monomials of different lengths");
    return compare_unchecked(a, b);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
    const std::size_t n = a.nvars();
    switch (kind_) {
        case OrderKind::grevlex:
            if (a.degree() != b.degree()) return a.degree() <=> b.degree();
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return b[i] <=> a[i];
            return std::strong_ordering::equal;
        case OrderKind::lex:
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] <=> b[i];
            return std::strong_ordering::equal;
        case OrderKind::block: {
            std::size_t k = std::min(block_, n);
            auto head = grevlex_range(a, b, 0, k);
            if (head != std::strong_ordering::equal) return head;
            return grevlex_range(a, b, k, n);
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace sally
