#include "monadforge/stability.hpp"

#include <algorithm>
#include <string>

#include "monadforge/cohomology.hpp"
#include "monadforge/parallel.hpp"

namespace monadforge {

namespace {

long rank_T(const SpaceParams& p)
{
    return 2L * p.n + 2L * p.m + 3L * p.k;
}

long rank_middle(const SpaceParams& p)
{
    return 2L * p.n + 2L * p.m + 4L * p.k;
}

Integer h0_of_twisted(const LineBundleSum& wedge, const MultiDegree& twist)
{
    Integer total = 0;
    for (const auto& [deg, mult] : wedge.summands()) {
        const MultiDegree d = deg + twist;
        if (d.has_negative_component())
            continue;
        total += mult * kunneth_h0(wedge.params(), d);
    }
    return total;
}

bool all_negative(const LineBundleSum& wedge, const MultiDegree& twist)
{
    for (const auto& [deg, mult] : wedge.summands())
        if (!(deg + twist).has_negative_component())
            return false;
    return true;
}

}  // namespace

StabilityScanConfig StabilityScanConfig::defaults(const SpaceParams& params)
{
    StabilityScanConfig cfg;
    cfg.params = params;
    cfg.max_q = static_cast<unsigned>(std::min(8L, rank_T(params) - 1));
    cfg.max_psum = 4;
    cfg.component_bound = 4;
    cfg.min_psum = 0;
    return cfg;
}

void StabilityScanConfig::validate() const
{
    if (max_q < 1 || static_cast<long>(max_q) > rank_T(params) - 1)
        throw DomainError("max_q must be in 1.." + std::to_string(rank_T(params) - 1) + ", got " +
                          std::to_string(max_q));
    if (component_bound < 0)
        throw DomainError("component_bound must be non-negative");
    if (min_psum > max_psum)
        throw DomainError("empty p-sum window");
}

Integer normalization_shift(const BundleInvariants& inv, const SpaceParams& params)
{
    const Integer d = delta_L({1, 0, 0, 0}, params);
    // ceil(num / (den * d)), d > 0
    Integer out;
    Integer denom = inv.slope.get_den() * d;
    mpz_cdiv_q(out.get_mpz_t(), inv.slope.get_num().get_mpz_t(), denom.get_mpz_t());
    return out;
}

Integer h0_wedge_middle(const SpaceParams& params, unsigned q, const MultiDegree& twist)
{
    if (q < 1 || static_cast<long>(q) > rank_middle(params))
        throw DomainError("exterior power index " + std::to_string(q) + " out of range 1.." +
                          std::to_string(rank_middle(params)));
    return h0_of_twisted(exterior_power_sum(monad_middle(params), q), twist);
}

Integer h0_wedge_T_upper(const SpaceParams& params, unsigned q, const MultiDegree& twist)
{
    if (q < 1 || static_cast<long>(q) > rank_T(params))
        throw DomainError("exterior power index " + std::to_string(q) + " out of range 1.." +
                          std::to_string(rank_T(params)));
    return h0_wedge_middle(params, q, twist);
}

bool twisted_wedge_has_negative_components(const SpaceParams& params, unsigned q, const MultiDegree& twist)
{
    return all_negative(exterior_power_sum(monad_middle(params), q), twist);
}

std::vector<MultiDegree> enumerate_twists(const StabilityScanConfig& cfg)
{
    std::vector<MultiDegree> twists;
    const long lo = -cfg.component_bound;
    for (long s = cfg.min_psum; s <= cfg.max_psum; ++s) {
        const long hi = s - 3 * lo;  // the other three components sit at their minimum
        for (long p1 = lo; p1 <= hi; ++p1)
            for (long p2 = lo; p1 + p2 <= s - 2 * lo; ++p2)
                for (long p3 = lo; p1 + p2 + p3 <= s - lo; ++p3) {
                    const long p4 = s - p1 - p2 - p3;
                    twists.emplace_back(-p1, -p2, -p3, -p4);
                }
    }
    std::sort(twists.begin(), twists.end());
    return twists;
}

StabilityReport run_stability_scan(const StabilityScanConfig& cfg)
{
    cfg.validate();
    const std::vector<MultiDegree> twists = enumerate_twists(cfg);
    const LineBundleSum middle = monad_middle(cfg.params);

    struct PerQ {
        std::vector<ScanEntry> entries;
        bool invariant = true;
    };
    std::vector<PerQ> results(cfg.max_q);

    parallel_for(cfg.max_q, [&](std::size_t idx) {
        const unsigned q = static_cast<unsigned>(idx + 1);
        const LineBundleSum wedge = exterior_power_sum(middle, q);
        PerQ& out = results[idx];
        out.entries.reserve(twists.size());
        for (const auto& tw : twists) {
            out.entries.push_back({q, tw, h0_of_twisted(wedge, tw)});
            // the structural reason for vanishing only applies inside the sum(p) >= 0 regime
            if (-tw.total() >= 0 && !all_negative(wedge, tw))
                out.invariant = false;
        }
    });

    StabilityReport report;
    report.config = cfg;
    report.checked.reserve(cfg.max_q * twists.size());
    for (auto& r : results) {
        report.negative_component_invariant = report.negative_component_invariant && r.invariant;
        for (auto& e : r.entries) {
            if (!report.counterexample && e.h0 != 0)
                report.counterexample = e;
            report.checked.push_back(std::move(e));
        }
    }
    return report;
}

}  // namespace monadforge
