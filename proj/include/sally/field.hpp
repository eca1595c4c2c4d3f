#ifndef SALLY_FIELD_HPP
#define SALLY_FIELD_HPP

#include <cstdint>

namespace sally {

/// Residue in [0, p). The modulus lives in the owning PrimeField.
using Coeff = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
public:
    static constexpr std::uint32_t kDefaultPrime = 32003;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const noexcept { return p_; }

    Coeff add(Coeff a, Coeff b) const noexcept {
        Coeff s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const noexcept {
        return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Throws DivisionByZero on a == 0.
    Coeff inverse(Coeff a) const;
    Coeff from_int(std::int64_t v) const noexcept;
    /// Symmetric representative in (-p/2, p/2].
    std::int64_t to_signed(Coeff a) const noexcept;

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

}  // namespace sally

#endif  // SALLY_FIELD_HPP
