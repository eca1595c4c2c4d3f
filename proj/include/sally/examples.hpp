#ifndef SALLY_EXAMPLES_HPP
#define SALLY_EXAMPLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sally/ideal.hpp"

namespace sally {

/// A ring with an ideal I, a candidate reduction Q, an optional auxiliary
/// ideal h (an element to adjoin, for the I + (h) test) and the expected
/// values known for the instance. Expectation keys: e0..ed, colength, c, r,
/// rr_gap (= l(closure/I)), dim, certifies (0 when Q is known not to be a
/// reduction of I).
struct NamedInstance {
    std::string name;
    RingSpecPtr ring;
    IdealHandle ideal;
    IdealHandle reduction;
    std::optional<IdealHandle> adjoin;
    std::map<std::string, std::int64_t> expected;
};

/// Ring on x1..xm, y, v1..vd, z1..zd (grevlex) modulo
///   (x_j, y)(x_j, y, v_i) + (v_i v_j, i != j) + (v_i^2 - z_i y),
/// with I = (z_i) + (x_a, a in subset) + (v_i), Q = (z_i) and h = y.
NamedInstance gno_family(unsigned m, unsigned d, const std::set<unsigned>& subset,
                         std::uint32_t prime = PrimeField::kDefaultPrime);

/// k[x,y,z], I = (x^2 - y^2, x^2 - z^2, xy, yz, zx), Q = (x^2 - y^2, x^2 - z^2, yz), h = z^2.
NamedInstance rossi_example(std::uint32_t prime = PrimeField::kDefaultPrime);

/// Regression instances, sorted by name. The entry "negative:not-a-reduction"
/// has a Q that is not a reduction of I.
std::vector<NamedInstance> catalog(std::uint32_t prime = PrimeField::kDefaultPrime);

std::string gno_name(unsigned m, unsigned d, const std::set<unsigned>& subset);

}  // namespace sally

#endif  // SALLY_EXAMPLES_HPP
