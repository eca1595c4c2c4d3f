#ifndef SALLY_POLY_HPP
#define SALLY_POLY_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sally/field.hpp"
#include "sally/monomial.hpp"

namespace sally {

/// Ambient polynomial ring k[x_1..x_n] with a fixed term order.
struct PolyRing {
    PrimeField field;
    std::vector<std::string> names;
    MonomialOrder order = MonomialOrder::grevlex();

    std::size_t nvars() const noexcept { return names.size(); }
    bool compatible(const PolyRing& other) const noexcept {
        return field == other.field && order == other.order && nvars() == other.nvars();
    }
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::vector<std::string> names, std::uint32_t prime = PrimeField::kDefaultPrime,
                           MonomialOrder order = MonomialOrder::grevlex());

struct Term {
    Monomial mono;
    Coeff coeff;
};

/// Sparse polynomial. Terms are strictly descending in the ring's order and
/// carry no zero coefficients, so the representation is canonical.
class Poly {
public:
    Poly() = default;
    explicit Poly(PolyRingPtr ring) : ring_(std::move(ring)) {}

    /// Sorts, merges duplicate monomials and drops zeros.
    static Poly from_terms(PolyRingPtr ring, std::vector<Term> terms);
    /// Trusts `terms` to be strictly descending with nonzero coefficients.
    static Poly from_canonical(PolyRingPtr ring, std::vector<Term> terms) {
        return Poly(std::move(ring), std::move(terms));
    }
    static Poly constant(PolyRingPtr ring, std::int64_t c);
    static Poly monomial(PolyRingPtr ring, const Monomial& m, Coeff c = 1);
    static Poly variable(PolyRingPtr ring, std::size_t index);

    const PolyRing& ring() const { return *ring_; }
    const PolyRingPtr& ring_ptr() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    Coeff leading_coeff() const { return terms_.front().coeff; }
    /// Highest total degree; -1 for the zero polynomial.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(Coeff c) const;
    Poly times(const Monomial& m, Coeff c = 1) const;
    Poly monic() const;

    /// this - c * m * g, the elementary reduction step.
    Poly sub_mul(Coeff c, const Monomial& m, const Poly& g) const;

    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    Poly(PolyRingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}

    void require_compatible(const Poly& other) const;

    PolyRingPtr ring_;
    std::vector<Term> terms_;
};

/// Exact quotient a / b. Throws StructuralError when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

}  // namespace sally

#endif  // SALLY_POLY_HPP
