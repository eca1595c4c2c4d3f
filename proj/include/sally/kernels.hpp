#ifndef SALLY_KERNELS_HPP
#define SALLY_KERNELS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sally/monomial.hpp"
#include "sally/poly.hpp"
#include "sally/reducer.hpp"

namespace sally {

/// Which implementation runs the data-parallel kernels. `serial` is the
/// reference; `openmp` produces identical results.
enum class Backend { serial, openmp };

/// Reduces every input fully against `reducer`. Output order matches input
/// order.
std::vector<Poly> reduce_batch(std::span<const Poly> inputs, const Reducer& reducer, Backend backend);

/// True iff every variable has a pure power among `leads`, i.e. finitely
/// many monomials avoid them.
bool finite_staircase(std::span<const Monomial> leads, std::size_t nvars);

/// Number of monomials in `nvars` variables divisible by none of `leads`.
/// The caller guarantees the count is finite (a pure power of every variable
/// occurs among `leads`).
std::uint64_t count_standard_monomials(std::span<const Monomial> leads, std::size_t nvars, Backend backend);

/// Standard monomials per degree, index = degree.
std::vector<std::uint64_t> standard_monomials_by_degree(std::span<const Monomial> leads, std::size_t nvars,
                                                        Backend backend);

}  // namespace sally

#endif  // SALLY_KERNELS_HPP
