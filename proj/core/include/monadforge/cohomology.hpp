#pragma once

#include <vector>

#include "monadforge/line_bundle_sum.hpp"
#include "monadforge/types.hpp"

namespace monadforge {

/// Binomial coefficient with the zero extension: C(a, b) = 0 whenever a < b or b < 0.
Integer binomial(std::int64_t a, std::int64_t b);

/// h^i(P^n, O(d)). Throws DomainError for i > n or n < 1.
Integer bott_h(int n, std::int64_t d, int i);

/// h^t(X, O_X(deg)) by the Kunneth convolution over the four factors.
Integer kunneth_h(const SpaceParams& params, const MultiDegree& deg, int t);

/// h^0(X, O_X(deg)); shortcut of kunneth_h(params, deg, 0).
Integer kunneth_h0(const SpaceParams& params, const MultiDegree& deg);

/// Dimensions h^t for t = 0..dim X.
struct CohTable {
    std::vector<Integer> dims;

    CohTable() = default;
    explicit CohTable(int dim_top) : dims(static_cast<std::size_t>(dim_top) + 1, Integer(0)) {}

    int dim_top() const noexcept { return static_cast<int>(dims.size()) - 1; }
    const Integer& operator[](std::size_t t) const { return dims[t]; }
    Integer& operator[](std::size_t t) { return dims[t]; }
    /// Out-of-range degrees read as zero.
    Integer get(int t) const;
    Integer euler_characteristic() const;

    friend bool operator==(const CohTable&, const CohTable&) = default;
};

CohTable line_bundle_cohomology(const SpaceParams& params, const MultiDegree& deg);
CohTable sum_cohomology(const LineBundleSum& s);

/// Lambda^q of a sum of line bundles, enumerated as bounded compositions of q over the summands.
LineBundleSum exterior_power_sum(const LineBundleSum& s, unsigned q);

}  // namespace monadforge
