#include "monadforge/prime_field.hpp"

#include <string>

namespace monadforge {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint64_t p) : p_(p)
{
    if (p >= (1ULL << 32) || !is_prime(p))
        throw DomainError("field characteristic must be a prime below 2^32, got " + std::to_string(p));
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const noexcept
{
    std::uint64_t result = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const
{
    if (a % p_ == 0)
        throw DomainError("inverse of zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);
}

std::uint64_t PrimeField::reduce(const Integer& z) const
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
    return r.get_ui();
}

}  // namespace monadforge
