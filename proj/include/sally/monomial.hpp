#ifndef SALLY_MONOMIAL_HPP
#define SALLY_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace sally {

inline constexpr std::size_t kMaxVars = 30;

/// Exponent vector of fixed capacity. Entries past nvars() are always zero.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars);
    Monomial(std::size_t nvars, std::initializer_list<unsigned> exponents);
    Monomial(std::size_t nvars, std::span<const unsigned> exponents);

    static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
    void set(std::size_t i, unsigned e);

    bool is_one() const noexcept { return degree_ == 0; }
    /// Bit i set iff variable i occurs (variables >= 32 fold onto bit 31).
    std::uint32_t support_mask() const noexcept;

    bool divides(const Monomial& other) const noexcept;
    bool coprime(const Monomial& other) const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const noexcept {
        return nvars_ == other.nvars_ && exp_ == other.exp_;
    }

    std::string to_string(std::span<const std::string> names) const;

private:
    std::array<std::uint8_t, kMaxVars> exp_{};
    std::uint16_t degree_ = 0;
    std::uint8_t nvars_ = 0;
};

enum class OrderKind { grevlex, lex, block };

/// Term order. `block` compares the first `block_size` exponents by grevlex,
/// and only on a tie the remaining ones by grevlex.
class MonomialOrder {
public:
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex, 0); }
    static MonomialOrder elimination(std::size_t block_size) {
        return MonomialOrder(OrderKind::block, block_size);
    }

    OrderKind kind() const noexcept { return kind_; }
    std::size_t block_size() const noexcept { return block_; }
    std::string name() const;

    /// Throws StructuralError on length mismatch.
    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept;
    bool greater(const Monomial& a, const Monomial& b) const noexcept {
        return compare_unchecked(a, b) == std::strong_ordering::greater;
    }

    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(OrderKind k, std::size_t block) : kind_(k), block_(block) {}

    OrderKind kind_ = OrderKind::grevlex;
    std::size_t block_ = 0;
};

}  // namespace sally

#endif  // SALLY_MONOMIAL_HPP
