#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace monadforge {

/// Arbitrary-precision integer used for coefficients, dimensions and intersection numbers.
using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when matrix or table shapes do not line up.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation receives arguments outside its domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Ambient space X = P^n x P^n x P^m x P^m together with the monad width k.
struct SpaceParams {
    int n = 1;
    int m = 1;
    int k = 1;

    /// Validating constructor; every parameter must be positive.
    static SpaceParams make(int n, int m, int k);

    int dim() const noexcept { return 2 * n + 2 * m; }

    /// Dimension of the projective factor carrying coordinate group `g` (0..3).
    int factor_dim(int g) const noexcept { return g < 2 ? n : m; }

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
    friend auto operator<=>(const SpaceParams&, const SpaceParams&) = default;
};

inline SpaceParams SpaceParams::make(int n, int m, int k)
{
    if (n < 1 || m < 1 || k < 1)
        throw DomainError("space parameters n, m, k must all be positive (got n=" + std::to_string(n) +
                          ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")");
    return SpaceParams{n, m, k};
}

/// Class (a,b,c,d) of O_X(a,b,c,d) in Pic(X) = Z^4.
struct MultiDegree {
    std::array<std::int64_t, 4> v{0, 0, 0, 0};

    constexpr MultiDegree() = default;
    constexpr MultiDegree(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : v{a, b, c, d} {}

    constexpr std::int64_t& operator[](std::size_t i) { return v[i]; }
    constexpr std::int64_t operator[](std::size_t i) const { return v[i]; }

    constexpr std::int64_t total() const { return v[0] + v[1] + v[2] + v[3]; }

    constexpr bool has_negative_component() const { return v[0] < 0 || v[1] < 0 || v[2] < 0 || v[3] < 0; }

    constexpr MultiDegree& operator+=(const MultiDegree& o)
    {
        for (std::size_t i = 0; i < 4; ++i)
            v[i] += o.v[i];
        return *this;
    }
    constexpr MultiDegree& operator-=(const MultiDegree& o)
    {
        for (std::size_t i = 0; i < 4; ++i)
            v[i] -= o.v[i];
        return *this;
    }
    friend constexpr MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
    friend constexpr MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
    friend constexpr MultiDegree operator-(const MultiDegree& a) { return MultiDegree{} - a; }
    friend constexpr MultiDegree operator*(std::int64_t s, const MultiDegree& a)
    {
        return {s * a.v[0], s * a.v[1], s * a.v[2], s * a.v[3]};
    }

    friend constexpr bool operator==(const MultiDegree&, const MultiDegree&) = default;
    friend constexpr auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

    std::string str() const;
};

inline std::string MultiDegree::str() const
{
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + "," +
           std::to_string(v[3]) + ")";
}

}  // namespace monadforge
