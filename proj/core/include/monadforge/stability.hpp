#pragma once

#include <optional>
#include <vector>

#include "monadforge/chow.hpp"
#include "monadforge/line_bundle_sum.hpp"
#include "monadforge/types.hpp"

namespace monadforge {

/// Bounds of the Hoppe-criterion scan. Twists are O(-p1,-p2,-p3,-p4) with
/// min_psum <= p1+p2+p3+p4 <= max_psum and every p_i >= -component_bound.
struct StabilityScanConfig {
    SpaceParams params;
    unsigned max_q = 1;
    long max_psum = 4;
    long component_bound = 4;
    /// Lower end of the p-sum window. Anything below 0 leaves the regime the criterion needs,
    /// which is only useful for negative controls.
    long min_psum = 0;

    /// max_q = min(8, rank T - 1), max_psum = 4, component_bound = 4.
    static StabilityScanConfig defaults(const SpaceParams& params);
    /// Throws DomainError when max_q is 0 or exceeds rank T - 1, or the window is empty.
    void validate() const;
};

struct ScanEntry {
    unsigned q = 0;
    MultiDegree twist;  // the degree added, i.e. (-p1,-p2,-p3,-p4)
    Integer h0;
};

struct StabilityReport {
    StabilityScanConfig config;
    std::vector<ScanEntry> checked;  // sorted by (q, twist)
    /// Every twisted summand of every scanned Lambda^q(G_n + G_m) has a strictly negative component.
    bool negative_component_invariant = true;
    std::optional<ScanEntry> counterexample;  // first nonzero entry in (q, twist) order

    bool all_vanish() const { return !counterexample.has_value(); }
};

/// k_E = ceil(mu_L / d) with d = delta_L(1,0,0,0).
Integer normalization_shift(const BundleInvariants& inv, const SpaceParams& params);

/// h^0 of Lambda^q(G_n + G_m) twisted by `twist`, for 1 <= q <= rank(G_n + G_m).
Integer h0_wedge_middle(const SpaceParams& params, unsigned q, const MultiDegree& twist);

/// Upper bound for h^0(Lambda^q T(twist)) through Lambda^q T -> Lambda^q (G_n + G_m); needs 1 <= q <= rank T.
Integer h0_wedge_T_upper(const SpaceParams& params, unsigned q, const MultiDegree& twist);

/// Whether every summand of Lambda^q(G_n + G_m)(twist) has a strictly negative component.
bool twisted_wedge_has_negative_components(const SpaceParams& params, unsigned q, const MultiDegree& twist);

/// Every twist (-p) with min_psum <= sum(p) <= max_psum and p_i >= -component_bound, sorted.
std::vector<MultiDegree> enumerate_twists(const StabilityScanConfig& cfg);

StabilityReport run_stability_scan(const StabilityScanConfig& cfg);

}  // namespace monadforge
