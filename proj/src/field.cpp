#include "sally/field.hpp"

#include <string>

#include "sally/errors.hpp"

namespace sally {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2)
        if (n % f == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw StructuralError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
}

Coeff PrimeField::inverse(Coeff a) const {
    if (a % p_ == 0) throw DivisionByZero("inverse of zero in Z/" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = a % p_;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
    }
    return from_int(s0);
}

Coeff PrimeField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Coeff>(r);
}

std::int64_t PrimeField::to_signed(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace sally
