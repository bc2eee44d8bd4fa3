#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monadforge/cohomology.hpp"
#include "monadforge/stability.hpp"
#include "monadforge/types.hpp"

namespace monadforge {

struct Interval {
    Integer lo;
    Integer hi;

    bool collapsed() const { return lo == hi; }
    bool contains(const Integer& v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Cohomology knowledge about one member of a short exact sequence.
class CohProfile {
public:
    enum class Kind { Exact, Unknown, Bounds };

    CohProfile() = default;
    static CohProfile exact(const CohTable& table);
    static CohProfile unknown();
    /// Collapses to Exact when every interval has lo == hi. Throws DomainError unless 0 <= lo <= hi.
    static CohProfile bounds(std::vector<Interval> intervals);

    Kind kind() const noexcept { return kind_; }
    bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }
    /// Interval for h^t; [0,0] outside the stored range.
    Interval at(int t) const;
    std::optional<CohTable> table() const;

private:
    Kind kind_ = Kind::Unknown;
    std::vector<Interval> intervals_;
};

/// 0 -> left -> middle -> right -> 0, with cohomology in degrees 0..dim_top.
struct ShortExactSeq {
    CohProfile left;
    CohProfile middle;
    CohProfile right;
    int dim_top = 0;
};

/// Replaces the single Unknown member by the bounds that follow from exactness of the long sequence.
/// Throws DomainError unless exactly one member is Unknown.
ShortExactSeq les_propagate(const ShortExactSeq& seq);

/// Whether some choice within each interval gives a vanishing alternating sum of chi(A) - chi(B) + chi(C).
bool euler_consistent(const ShortExactSeq& seq);

enum class Conclusion { SimpleCertified, Inconclusive };

struct SimplicityCertificate {
    SpaceParams params;
    long rank_E = 0;
    long rank_T = 0;
    Interval h0_T_dual_twisted;
    Interval h1_T_dual_twisted;
    bool t_stable = false;
    bool composition_zero = false;
    Conclusion conclusion = Conclusion::Inconclusive;
    std::string reason;

    // audit trail for 0 -> O(-2,-2,-2,-2)^k -> (G_n + G_m)^*(-1,-1,-1,-1) -> T^*(-1,-1,-1,-1) -> 0
    LineBundleSum sequence_left;
    LineBundleSum sequence_middle;
    ShortExactSeq propagated;
    StabilityReport stability;
};

/// rank E = rank(G_n + G_m) - 2k, checked against 2n + 2m + 2k.
long rank_of_E(const SpaceParams& params);

/// The dualised, (-1,-1,-1,-1)-twisted kernel sequence with T^* unknown, ready for propagation.
ShortExactSeq twisted_dual_kernel_sequence(const SpaceParams& params);

/// Runs the stability scan and the LES deduction, then gates the conclusion on both.
SimplicityCertificate simplicity_certificate(const SpaceParams& params, const StabilityScanConfig& scan_cfg);

/// Same as above with a precomputed stability report.
SimplicityCertificate simplicity_certificate(const SpaceParams& params, StabilityReport stability);

}  // namespace monadforge
