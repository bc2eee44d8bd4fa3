#include "monadforge/les.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "monadforge/monad.hpp"

namespace monadforge {

CohProfile CohProfile::exact(const CohTable& table)
{
    CohProfile p;
    p.kind_ = Kind::Exact;
    for (const auto& d : table.dims)
        p.intervals_.push_back({d, d});
    return p;
}

CohProfile CohProfile::unknown()
{
    return CohProfile{};
}

CohProfile CohProfile::bounds(std::vector<Interval> intervals)
{
    CohProfile p;
    p.kind_ = Kind::Exact;
    for (const auto& iv : intervals) {
        if (iv.lo < 0 || iv.lo > iv.hi)
            throw DomainError("invalid interval [" + iv.lo.get_str() + ", " + iv.hi.get_str() + "]");
        if (!iv.collapsed())
            p.kind_ = Kind::Bounds;
    }
    p.intervals_ = std::move(intervals);
    return p;
}

Interval CohProfile::at(int t) const
{
    if (t < 0 || t >= static_cast<int>(intervals_.size()))
        return {0, 0};
    return intervals_[static_cast<std::size_t>(t)];
}

std::optional<CohTable> CohProfile::table() const
{
    if (kind_ != Kind::Exact)
        return std::nullopt;
    CohTable t(static_cast<int>(intervals_.size()) - 1);
    for (std::size_t i = 0; i < intervals_.size(); ++i)
        t[i] = intervals_[i].lo;
    return t;
}

namespace {

Integer clamp0(const Integer& v)
{
    return v < 0 ? Integer(0) : v;
}

void check_length(const CohProfile& p, int dim_top, const char* which)
{
    if (!p.is_unknown() && static_cast<int>(p.intervals().size()) != dim_top + 1)
        throw ShapeError(std::string(which) + " profile has " + std::to_string(p.intervals().size()) +
                         " degrees, expected " + std::to_string(dim_top + 1));
}

}  // namespace

ShortExactSeq les_propagate(const ShortExactSeq& seq)
{
    const int unknowns = seq.left.is_unknown() + seq.middle.is_unknown() + seq.right.is_unknown();
    if (unknowns != 1)
        throw DomainError("les_propagate needs exactly one unknown member, got " + std::to_string(unknowns));
    if (seq.dim_top < 0)
        throw DomainError("dim_top must be non-negative");
    check_length(seq.left, seq.dim_top, "left");
    check_length(seq.middle, seq.dim_top, "middle");
    check_length(seq.right, seq.dim_top, "right");

    // ... -> H^i(A) -> H^i(B) -> H^i(C) -> H^{i+1}(A) -> ...
    // Each dimension splits as image-in plus image-out; the two lower bounds are bounds on those pieces.
    const CohProfile& A = seq.left;
    const CohProfile& B = seq.middle;
    const CohProfile& C = seq.right;
    std::vector<Interval> out;
    for (int i = 0; i <= seq.dim_top; ++i) {
        Interval iv;
        if (C.is_unknown()) {
            iv.hi = B.at(i).hi + A.at(i + 1).hi;
            iv.lo = clamp0(B.at(i).lo - A.at(i).hi) + clamp0(A.at(i + 1).lo - B.at(i + 1).hi);
        } else if (A.is_unknown()) {
            iv.hi = C.at(i - 1).hi + B.at(i).hi;
            iv.lo = clamp0(C.at(i - 1).lo - B.at(i - 1).hi) + clamp0(B.at(i).lo - C.at(i).hi);
        } else {
            iv.hi = A.at(i).hi + C.at(i).hi;
            iv.lo = clamp0(A.at(i).lo - C.at(i - 1).hi) + clamp0(C.at(i).lo - A.at(i + 1).hi);
        }
        out.push_back(iv);
    }

    ShortExactSeq result = seq;
    CohProfile filled = CohProfile::bounds(std::move(out));
    if (A.is_unknown())
        result.left = filled;
    else if (B.is_unknown())
        result.middle = filled;
    else
        result.right = filled;
    return result;
}

bool euler_consistent(const ShortExactSeq& seq)
{
    if (seq.left.is_unknown() || seq.middle.is_unknown() || seq.right.is_unknown())
        return false;
    // alternating sum of (A - B + C) ranges over an interval; check it contains zero
    Integer lo = 0, hi = 0;
    for (int i = 0; i <= seq.dim_top; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        const Interval parts[3] = {seq.left.at(i), seq.middle.at(i), seq.right.at(i)};
        const int inner[3] = {1, -1, 1};
        for (int j = 0; j < 3; ++j) {
            const int s = sign * inner[j];
            if (s > 0) {
                lo += parts[j].lo;
                hi += parts[j].hi;
            } else {
                lo -= parts[j].hi;
                hi -= parts[j].lo;
            }
        }
    }
    return lo <= 0 && 0 <= hi;
}

long rank_of_E(const SpaceParams& params)
{
    const long from_monad = monad_middle(params).rank().get_si() - 2L * params.k;
    const long closed_form = 2L * params.n + 2L * params.m + 2L * params.k;
    if (from_monad != closed_form)
        throw std::logic_error("rank of E disagrees between monad ranks and closed form");
    return closed_form;
}

namespace {

LineBundleSum dual_sequence_left(const SpaceParams& params)
{
    return twist(monad_source(params), {-1, -1, -1, -1});
}

LineBundleSum dual_sequence_middle(const SpaceParams& params)
{
    return twist(dual(monad_middle(params)), {-1, -1, -1, -1});
}

}  // namespace

ShortExactSeq twisted_dual_kernel_sequence(const SpaceParams& params)
{
    ShortExactSeq seq;
    seq.dim_top = params.dim();
    seq.left = CohProfile::exact(sum_cohomology(dual_sequence_left(params)));
    seq.middle = CohProfile::exact(sum_cohomology(dual_sequence_middle(params)));
    seq.right = CohProfile::unknown();
    return seq;
}

SimplicityCertificate simplicity_certificate(const SpaceParams& params, const StabilityScanConfig& scan_cfg)
{
    if (scan_cfg.params != params)
        throw DomainError("stability scan configured for a different space");
    return simplicity_certificate(params, run_stability_scan(scan_cfg));
}

SimplicityCertificate simplicity_certificate(const SpaceParams& params, StabilityReport stability)
{
    SimplicityCertificate cert;
    cert.params = params;
    cert.rank_E = rank_of_E(params);
    cert.rank_T = 2L * params.n + 2L * params.m + 3L * params.k;
    cert.sequence_left = dual_sequence_left(params);
    cert.sequence_middle = dual_sequence_middle(params);
    cert.propagated = les_propagate(twisted_dual_kernel_sequence(params));
    cert.h0_T_dual_twisted = cert.propagated.right.at(0);
    cert.h1_T_dual_twisted = cert.propagated.right.at(1);
    cert.t_stable = stability.all_vanish() && stability.negative_component_invariant;
    cert.composition_zero = verify_composition(assemble_monad(params));
    cert.stability = std::move(stability);

    const Interval zero{0, 0};
    if (!cert.composition_zero) {
        cert.reason = "monad composition f*g is not zero";
    } else if (!cert.t_stable) {
        cert.reason = "stability scan failed";
    } else if (cert.h0_T_dual_twisted != zero) {
        cert.reason = "h0(T*(-1,-1,-1,-1)) not forced to vanish";
    } else if (cert.h1_T_dual_twisted != zero) {
        cert.reason = "h1(T*(-1,-1,-1,-1)) not forced to vanish";
    }
    cert.conclusion = cert.reason.empty() ? Conclusion::SimpleCertified : Conclusion::Inconclusive;
    return cert;
}

}  // namespace monadforge
