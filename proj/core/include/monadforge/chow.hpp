#pragma once

#include <array>
#include <map>
#include <string>

#include "monadforge/line_bundle_sum.hpp"
#include "monadforge/types.hpp"

namespace monadforge {

/// Element of the Chow ring Z[a,b,c,d]/(a^{n+1}, b^{n+1}, c^{m+1}, d^{m+1}) of X.
/// a, b, c, d are the pulled-back hyperplane classes; a^n b^n c^m d^m is the point class.
class ChowClass {
public:
    using Exponents = std::array<int, 4>;
    using TermMap = std::map<Exponents, Integer>;

    explicit ChowClass(SpaceParams params) : params_(params) {}

    static ChowClass one(const SpaceParams& params);
    /// Hyperplane class of factor `factor` (0..3).
    static ChowClass hyperplane(const SpaceParams& params, int factor);
    /// Divisor class a*D[0] + b*D[1] + c*D[2] + d*D[3].
    static ChowClass divisor(const SpaceParams& params, const MultiDegree& deg);
    /// L = a + b + c + d, the class of O_X(1,1,1,1).
    static ChowClass polarization(const SpaceParams& params);
    static ChowClass point(const SpaceParams& params);

    const SpaceParams& params() const noexcept { return params_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds coeff * a^e0 b^e1 c^e2 d^e3; exponents beyond the truncation vanish.
    void add_term(const Exponents& e, const Integer& coeff);
    Integer coefficient(const Exponents& e) const;

    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator*=(const Integer& s);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator*(const Integer& s, ChowClass a) { return a *= s; }
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    ChowClass pow(unsigned e) const;

    std::string str() const;

private:
    SpaceParams params_;
    TermMap terms_;
};

/// Product in the truncated ring; throws DomainError for classes on different spaces.
ChowClass chow_mul(const ChowClass& u, const ChowClass& v);

/// Coefficient of a^n b^n c^m d^m.
Integer top_coefficient(const ChowClass& u);

/// Sum of multiplicity * degree over the summands.
MultiDegree c1_of_sum(const LineBundleSum& s);

/// deg_L of a class with first Chern class c1: c1 . L^{dim X - 1}.
Integer degree_L(const MultiDegree& c1, const SpaceParams& params);

/// deg_L O_X(B), a linear functional on Z^4.
Integer delta_L(const MultiDegree& b, const SpaceParams& params);

struct BundleInvariants {
    long rank = 0;
    MultiDegree c1;
    Integer degree;
    Rational slope;
};

/// Invariants of the kernel bundle T = ker g, with 0 -> T -> G_n + G_m -> O(1,1,1,1)^k -> 0.
/// Throws std::logic_error if deg_L T is not negative.
BundleInvariants invariants_of_T(const SpaceParams& params);

/// Invariants of the monad cohomology bundle E, from 0 -> O(-1,-1,-1,-1)^k -> T -> E -> 0.
BundleInvariants invariants_of_E(const SpaceParams& params);

/// The closed form -(n+m+4k) * L^{2n+2m} printed alongside the degree computation for T; kept for comparison.
Integer printed_degree_formula_T(const SpaceParams& params);

}  // namespace monadforge
