#include "monadforge/line_bundle_sum.hpp"

namespace monadforge {

LineBundleSum::LineBundleSum(SpaceParams params, std::initializer_list<std::pair<MultiDegree, long>> summands)
    : params_(params)
{
    for (const auto& [deg, mult] : summands)
        add(deg, Integer(mult));
}

void LineBundleSum::add(const MultiDegree& deg, const Integer& multiplicity)
{
    if (multiplicity <= 0)
        throw DomainError("line bundle multiplicity must be positive, got " + multiplicity.get_str() + " for O" +
                          deg.str());
    summands_[deg] += multiplicity;
}

Integer LineBundleSum::multiplicity(const MultiDegree& deg) const
{
    auto it = summands_.find(deg);
    return it == summands_.end() ? Integer(0) : it->second;
}

Integer LineBundleSum::rank() const
{
    Integer r = 0;
    for (const auto& [deg, mult] : summands_)
        r += mult;
    return r;
}

LineBundleSum line_bundle_power(const SpaceParams& params, const MultiDegree& deg, long mult)
{
    LineBundleSum s(params);
    s.add(deg, Integer(mult));
    return s;
}

LineBundleSum monad_middle(const SpaceParams& p)
{
    return LineBundleSum(p, {{{0, -1, 0, 0}, p.n + p.k},
                             {{-1, 0, 0, 0}, p.n + p.k},
                             {{0, 0, -1, 0}, p.m + p.k},
                             {{0, 0, 0, -1}, p.m + p.k}});
}

LineBundleSum monad_source(const SpaceParams& p)
{
    return line_bundle_power(p, {-1, -1, -1, -1}, p.k);
}

LineBundleSum monad_target(const SpaceParams& p)
{
    return line_bundle_power(p, {1, 1, 1, 1}, p.k);
}

LineBundleSum direct_sum(const LineBundleSum& a, const LineBundleSum& b)
{
    if (a.params() != b.params())
        throw DomainError("direct sum of line bundle sums on different spaces");
    LineBundleSum out = a;
    for (const auto& [deg, mult] : b.summands())
        out.add(deg, mult);
    return out;
}

LineBundleSum twist(const LineBundleSum& s, const MultiDegree& d)
{
    LineBundleSum out(s.params());
    for (const auto& [deg, mult] : s.summands())
        out.add(deg + d, mult);
    return out;
}

LineBundleSum dual(const LineBundleSum& s)
{
    LineBundleSum out(s.params());
    for (const auto& [deg, mult] : s.summands())
        out.add(-deg, mult);
    return out;
}

}  // namespace monadforge
