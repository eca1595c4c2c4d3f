#ifndef SALLY_GROEBNER_HPP
#define SALLY_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "sally/kernels.hpp"
#include "sally/poly.hpp"
#include "sally/reducer.hpp"

namespace sally {

struct GroebnerStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t batches = 0;
};

/// Reduced Groebner basis (monic, leading monomials pairwise non-divisible,
/// tails fully reduced) sorted by descending leading monomial. Buchberger's
/// algorithm with the Gebauer-Moeller criteria and the sugar strategy; each
/// batch of pairs of minimal sugar is reduced through reduce_batch.
std::vector<Poly> groebner_basis(std::span<const Poly> generators, Backend backend = Backend::openmp,
                                 GroebnerStats* stats = nullptr);

/// Remainder of f modulo a Groebner basis.
Poly normal_form(const Poly& f, std::span<const Poly> basis);

/// Reduces each polynomial modulo `modulus` (a Groebner basis) and the
/// survivors before it. The result has pairwise distinct leading monomials
/// and generates the same ideal together with `modulus`.
std::vector<Poly> interreduce(std::span<const Poly> polys, std::span<const Poly> modulus,
                              Backend backend = Backend::openmp);

/// True iff the reduced bases coincide term by term.
bool same_basis(std::span<const Poly> a, std::span<const Poly> b);

}  // namespace sally

#endif  // SALLY_GROEBNER_HPP
