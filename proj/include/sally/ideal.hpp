#ifndef SALLY_IDEAL_HPP
#define SALLY_IDEAL_HPP

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "sally/groebner.hpp"
#include "sally/poly.hpp"

namespace sally {

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

/// A = k[x]/a with a homogeneous. Every ideal of A is represented by its full
/// preimage in k[x]; the local ring at the graded maximal ideal is never
/// materialized, which is exact for homogeneous ideals.
class RingSpec {
public:
    /// Validates homogeneity of `defining`, computes its Groebner basis and
    /// the Krull dimension. Throws StructuralError for a zero ring or d = 0.
    static RingSpecPtr create(PolyRingPtr ring, std::vector<Poly> defining, Backend backend = Backend::openmp);

    const PolyRingPtr& poly_ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return ring_->nvars(); }
    std::uint32_t characteristic() const noexcept { return ring_->field.modulus(); }
    std::span<const Poly> defining() const noexcept { return defining_; }
    std::span<const Poly> defining_basis() const noexcept { return defining_basis_; }
    std::size_t dim() const noexcept { return dim_; }
    Backend backend() const noexcept { return backend_; }

    Poly variable(std::size_t i) const { return Poly::variable(ring_, i); }
    Poly variable(const std::string& name) const;

    /// Same ambient ring and defining ideal, other kernel backend.
    RingSpecPtr with_backend(Backend backend) const;

private:
    RingSpec() = default;

    PolyRingPtr ring_;
    std::vector<Poly> defining_;
    std::vector<Poly> defining_basis_;
    std::size_t dim_ = 0;
    Backend backend_ = Backend::openmp;
};

/// Largest set of variables containing the support of no leading monomial.
std::size_t dimension_from_leads(std::span<const Monomial> leads, std::size_t nvars);

/// Krull dimension of k[x]/a.
std::size_t krull_dimension(const RingSpec& ring);

/// Homogeneous ideal of A, stored as generators; the reduced Groebner basis
/// of (generators + a) is computed once on first use (thread-safe) and shared
/// between copies.
class IdealHandle {
public:
    IdealHandle(RingSpecPtr ring, std::vector<Poly> gens);

    static IdealHandle unit(RingSpecPtr ring);
    static IdealHandle zero(RingSpecPtr ring);
    /// The graded maximal ideal (all variables).
    static IdealHandle maximal(RingSpecPtr ring);

    const RingSpec& ring() const noexcept { return *ring_; }
    const RingSpecPtr& ring_ptr() const noexcept { return ring_; }
    std::span<const Poly> gens() const noexcept { return gens_; }

    std::span<const Poly> gb() const;
    std::vector<Monomial> leading_monomials() const;
    bool is_unit() const;

    Poly normal_form(const Poly& f) const;
    bool contains(const Poly& f) const;
    /// other is a subset of *this.
    bool contains(const IdealHandle& other) const;

    std::string to_string() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<Poly> gb;
        Reducer reducer;
    };

    friend IdealHandle ideal_intersect(const IdealHandle&, const IdealHandle&);
    void seed_basis(std::vector<Poly> gb) const;
    const Cache& cache() const;

    RingSpecPtr ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<Cache> cache_;
};

enum class CombineOp { sum, product };

void require_same_ring(const IdealHandle& a, const IdealHandle& b);

IdealHandle ideal_combine(const IdealHandle& a, const IdealHandle& b, CombineOp op);
inline IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) { return ideal_combine(a, b, CombineOp::sum); }
inline IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
    return ideal_combine(a, b, CombineOp::product);
}
IdealHandle ideal_power(const IdealHandle& a, unsigned n);
/// a + (f)
IdealHandle ideal_adjoin(const IdealHandle& a, const Poly& f);

/// Elimination of an auxiliary variable t placed first in a block order:
/// (t*a + (1-t)*b) intersected with k[x].
IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b);

struct QuotientResult {
    IdealHandle ideal;
    /// Set when the divisor is the zero ideal of A; the result is then the unit ideal.
    bool divisor_was_zero = false;
};

/// (a :_A b), as the intersection over generators h of b of (a : h), each
/// computed as (a intersect (h)) / h in the ambient ring.
QuotientResult ideal_quotient(const IdealHandle& a, const IdealHandle& b);

bool ideal_equal(const IdealHandle& a, const IdealHandle& b);
inline bool ideal_contains(const IdealHandle& a, const Poly& f) { return a.contains(f); }

}  // namespace sally

#endif  // SALLY_IDEAL_HPP
