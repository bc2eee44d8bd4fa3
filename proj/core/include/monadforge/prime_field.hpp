#pragma once

#include <cstdint>

#include "monadforge/types.hpp"

namespace monadforge {

/// Arithmetic in F_p for primes p < 2^32, so products fit in 64 bits.
class PrimeField {
public:
    static constexpr std::uint64_t kMersenne31 = 2147483647ULL;  // 2^31 - 1
    static constexpr std::uint64_t kBillionSeven = 1000000007ULL;

    explicit PrimeField(std::uint64_t p = kMersenne31);

    std::uint64_t characteristic() const noexcept { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws DomainError for a == 0.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t reduce(const Integer& z) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t p_;
};

}  // namespace monadforge
