#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monadforge/types.hpp"

namespace monadforge {

class PrimeField;

/// Coordinate groups of X, in canonical storage order.
enum class VarGroup : std::uint8_t { X = 0, Y = 1, Z = 2, T = 3 };

struct Variable {
    VarGroup group = VarGroup::X;
    unsigned index = 0;

    static Variable x(unsigned i) { return {VarGroup::X, i}; }
    static Variable y(unsigned i) { return {VarGroup::Y, i}; }
    static Variable z(unsigned i) { return {VarGroup::Z, i}; }
    static Variable t(unsigned i) { return {VarGroup::T, i}; }

    /// Parses names of the form "x0", "t12".
    static Variable parse(std::string_view name);
    std::string name() const;

    /// Whether the index fits the factor dimension (n for x,y and m for z,t).
    bool valid_for(const SpaceParams& params) const;

    friend bool operator==(const Variable&, const Variable&) = default;
    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// All coordinates x0..xn, y0..yn, z0..zm, t0..tm in canonical order.
std::vector<Variable> all_variables(const SpaceParams& params);

/// Canonical monomial: sorted (variable, exponent) pairs with every exponent >= 1.
class Monomial {
public:
    using Entry = std::pair<Variable, unsigned>;

    Monomial() = default;
    explicit Monomial(Variable v, unsigned exponent = 1);
    /// Accepts entries in any order; merges repeats and drops zero exponents.
    static Monomial from_entries(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    bool is_one() const noexcept { return entries_.empty(); }
    unsigned exponent(Variable v) const;
    MultiDegree multidegree() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string str() const;

private:
    std::vector<Entry> entries_;
};

/// Sparse polynomial with exact integer coefficients in the coordinates of X.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(const Integer& constant);
    Polynomial(Variable v);
    Polynomial(const Monomial& mono, const Integer& coeff);

    static Polynomial var(Variable v) { return Polynomial(v); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Integer coefficient(const Monomial& mono) const;

    /// Adds coeff * mono, dropping the term if it cancels.
    void add_term(const Monomial& mono, const Integer& coeff);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Evaluates in the prime field; throws DomainError naming the first unassigned variable.
    std::uint64_t evaluate(const std::map<Variable, std::uint64_t>& point, const PrimeField& field) const;

    std::string str() const;

private:
    TermMap terms_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// Common multidegree of every term; nullopt for the zero polynomial or inhomogeneous input.
std::optional<MultiDegree> multidegree_of(const Polynomial& p);

}  // namespace monadforge
