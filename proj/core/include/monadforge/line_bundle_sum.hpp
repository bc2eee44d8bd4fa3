#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "monadforge/types.hpp"

namespace monadforge {

/// Direct sum of line bundles on X, stored as a canonical multiset of multidegrees.
class LineBundleSum {
public:
    using SummandMap = std::map<MultiDegree, Integer>;

    LineBundleSum() = default;
    explicit LineBundleSum(SpaceParams params) : params_(params) {}
    LineBundleSum(SpaceParams params, std::initializer_list<std::pair<MultiDegree, long>> summands);

    const SpaceParams& params() const noexcept { return params_; }
    const SummandMap& summands() const noexcept { return summands_; }
    bool empty() const noexcept { return summands_.empty(); }

    /// Adds `multiplicity` copies of O_X(deg); non-positive multiplicities are rejected.
    void add(const MultiDegree& deg, const Integer& multiplicity);
    Integer multiplicity(const MultiDegree& deg) const;
    Integer rank() const;

    friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;

private:
    SpaceParams params_{};
    SummandMap summands_;
};

/// O_X(deg)^mult.
LineBundleSum line_bundle_power(const SpaceParams& params, const MultiDegree& deg, long mult);

/// G_n + G_m: O(0,-1,0,0)^{n+k} + O(-1,0,0,0)^{n+k} + O(0,0,-1,0)^{m+k} + O(0,0,0,-1)^{m+k}.
LineBundleSum monad_middle(const SpaceParams& params);
/// O(-1,-1,-1,-1)^k.
LineBundleSum monad_source(const SpaceParams& params);
/// O(1,1,1,1)^k.
LineBundleSum monad_target(const SpaceParams& params);

LineBundleSum direct_sum(const LineBundleSum& a, const LineBundleSum& b);
LineBundleSum twist(const LineBundleSum& s, const MultiDegree& d);
/// Summand-wise negation of degrees.
LineBundleSum dual(const LineBundleSum& s);

}  // namespace monadforge
