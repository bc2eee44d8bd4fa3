#include "monadforge/cohomology.hpp"

#include <string>
#include <vector>

namespace monadforge {

Integer binomial(std::int64_t a, std::int64_t b)
{
    if (b < 0 || a < b)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
}

Integer bott_h(int n, std::int64_t d, int i)
{
    if (n < 1)
        throw DomainError("projective space dimension must be positive, got " + std::to_string(n));
    if (i < 0 || i > n)
        throw DomainError("cohomological degree " + std::to_string(i) + " out of range for P^" + std::to_string(n));
    Integer out = 0;
    if (i == 0 && d >= 0)
        out += binomial(n + d, n);
    if (i == n && -d - n - 1 >= 0)
        out += binomial(-d - 1, n);
    return out;
}

Integer kunneth_h(const SpaceParams& params, const MultiDegree& deg, int t)
{
    if (t < 0 || t > params.dim())
        throw DomainError("cohomological degree " + std::to_string(t) + " out of range 0.." +
                          std::to_string(params.dim()));
    // Each factor contributes only in degrees 0 and dim, so iterate over those choices.
    Integer total = 0;
    for (int mask = 0; mask < 16; ++mask) {
        int degree = 0;
        for (int g = 0; g < 4; ++g)
            if (mask & (1 << g))
                degree += params.factor_dim(g);
        if (degree != t)
            continue;
        Integer prod = 1;
        for (int g = 0; g < 4 && prod != 0; ++g) {
            int i = (mask & (1 << g)) ? params.factor_dim(g) : 0;
            prod *= bott_h(params.factor_dim(g), deg[static_cast<std::size_t>(g)], i);
        }
        total += prod;
    }
    return total;
}

Integer kunneth_h0(const SpaceParams& params, const MultiDegree& deg)
{
    if (deg.has_negative_component())
        return 0;
    Integer prod = 1;
    for (int g = 0; g < 4; ++g) {
        const int dim = params.factor_dim(g);
        prod *= binomial(dim + deg[static_cast<std::size_t>(g)], dim);
    }
    return prod;
}

Integer CohTable::get(int t) const
{
    if (t < 0 || t >= static_cast<int>(dims.size()))
        return 0;
    return dims[static_cast<std::size_t>(t)];
}

Integer CohTable::euler_characteristic() const
{
    Integer chi = 0;
    for (std::size_t t = 0; t < dims.size(); ++t)
        chi += (t % 2 == 0) ? dims[t] : Integer(-dims[t]);
    return chi;
}

CohTable line_bundle_cohomology(const SpaceParams& params, const MultiDegree& deg)
{
    CohTable table(params.dim());
    for (int t = 0; t <= params.dim(); ++t)
        table[static_cast<std::size_t>(t)] = kunneth_h(params, deg, t);
    return table;
}

CohTable sum_cohomology(const LineBundleSum& s)
{
    CohTable table(s.params().dim());
    for (const auto& [deg, mult] : s.summands()) {
        CohTable piece = line_bundle_cohomology(s.params(), deg);
        for (std::size_t t = 0; t < table.dims.size(); ++t)
            table[t] += mult * piece[t];
    }
    return table;
}

namespace {

struct CompositionWalker {
    std::vector<std::pair<MultiDegree, Integer>> parts;
    LineBundleSum& out;

    void walk(std::size_t idx, unsigned remaining, const MultiDegree& deg, const Integer& mult)
    {
        if (remaining == 0) {
            out.add(deg, mult);
            return;
        }
        if (idx == parts.size())
            return;
        const auto& [summand, avail] = parts[idx];
        unsigned cap = avail.fits_ulong_p() ? static_cast<unsigned>(std::min<unsigned long>(avail.get_ui(), remaining))
                                            : remaining;
        for (unsigned take = 0; take <= cap; ++take) {
            Integer ways;
            mpz_bin_ui(ways.get_mpz_t(), avail.get_mpz_t(), take);
            walk(idx + 1, remaining - take, deg + static_cast<std::int64_t>(take) * summand, mult * ways);
        }
    }
};

}  // namespace

LineBundleSum exterior_power_sum(const LineBundleSum& s, unsigned q)
{
    if (Integer(q) > s.rank())
        throw DomainError("exterior power " + std::to_string(q) + " exceeds rank " + s.rank().get_str());
    LineBundleSum out(s.params());
    if (q == 0) {
        out.add(MultiDegree{}, 1);
        return out;
    }
    CompositionWalker walker{{s.summands().begin(), s.summands().end()}, out};
    walker.walk(0, q, MultiDegree{}, Integer(1));
    return out;
}

}  // namespace monadforge
