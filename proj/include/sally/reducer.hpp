#ifndef SALLY_REDUCER_HPP
#define SALLY_REDUCER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sally/poly.hpp"

namespace sally {

/// Non-owning view of a polynomial list, indexed for divisor lookup by
/// leading monomial. The referenced polynomials must outlive the reducer.
class Reducer {
public:
    Reducer() = default;
    explicit Reducer(std::span<const Poly> polys);

    /// Zero polynomials are ignored.
    void add(const Poly& p);
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Index of the first element whose leading monomial divides m.
    std::optional<std::size_t> find_divisor(const Monomial& m) const noexcept;

    /// Full reduction: no term of the result is divisible by a leading
    /// monomial of the set.
    Poly reduce(const Poly& f) const;

private:
    struct Entry {
        const Poly* poly;
        Monomial lead;
        std::uint32_t mask;
        Coeff lead_inverse;
    };
    std::vector<Entry> entries_;
};

}  // namespace sally

#endif  // SALLY_REDUCER_HPP
