#ifndef SALLY_TEST_SUPPORT_HPP
#define SALLY_TEST_SUPPORT_HPP

#include <random>

#include "sally/ideal.hpp"
#include "sally/poly.hpp"

namespace sally::testing {

inline Poly random_poly(const PolyRingPtr& ring, std::mt19937& rng, int nterms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> e(0, max_exp);
    std::uniform_int_distribution<Coeff> c(0, ring->field.modulus() - 1);
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i) {
        Monomial m(ring->nvars());
        for (std::size_t v = 0; v < ring->nvars(); ++v) m.set(v, e(rng));
        terms.push_back({m, c(rng)});
    }
    return Poly::from_terms(ring, std::move(terms));
}

/// Random homogeneous polynomial of the given degree.
inline Poly random_form(const PolyRingPtr& ring, std::mt19937& rng, unsigned degree, int nterms) {
    std::uniform_int_distribution<std::size_t> var(0, ring->nvars() - 1);
    std::uniform_int_distribution<Coeff> c(1, ring->field.modulus() - 1);
    std::vector<Term> terms;
    for (int i = 0; i < nterms; ++i) {
        Monomial m(ring->nvars());
        for (unsigned k = 0; k < degree; ++k) {
            std::size_t v = var(rng);
            m.set(v, m[v] + 1);
        }
        terms.push_back({m, c(rng)});
    }
    return Poly::from_terms(ring, std::move(terms));
}

/// k-dimension of the degree-t part of k[x]/J, by enumerating monomials of
/// degree t and computing the rank of all multiples m*g of degree t of the
/// generators of J and of the defining ideal. Independent of the standard
/// monomial counting kernel and of Groebner bases; tiny rings only.
std::size_t hilbert_function_by_linear_algebra(const IdealHandle& ideal, unsigned degree);

/// Sum of the above until a degree with value 0; returns size_t(-1) if none
/// is reached by max_degree.
std::size_t colength_by_linear_algebra(const IdealHandle& ideal, unsigned max_degree);

std::vector<Monomial> all_monomials(std::size_t nvars, unsigned degree);

}  // namespace sally::testing

#endif
