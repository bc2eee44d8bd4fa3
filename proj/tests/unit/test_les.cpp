#include <random>

#include <doctest.h>

#include "monadforge/les.hpp"

using namespace monadforge;

namespace {

CohProfile exact_of(const LineBundleSum& s)
{
    return CohProfile::exact(sum_cohomology(s));
}

}  // namespace

TEST_CASE("propagation through the twisted dual kernel sequence")
{
    const auto p = SpaceParams::make(1, 2, 3);
    const auto seq = les_propagate(twisted_dual_kernel_sequence(p));
    CHECK(seq.right.at(0) == Interval{0, 0});
    CHECK(seq.right.at(1) == Interval{0, 0});
    CHECK(seq.right.kind() == CohProfile::Kind::Exact);
    CHECK(euler_consistent(seq));
}

TEST_CASE("0 -> A -> A -> 0 -> 0 forces the cokernel to vanish when A is acyclic")
{
    const auto p = SpaceParams::make(1, 1, 1);
    const LineBundleSum a(p, {{{-1, 0, 2, 0}, 2}, {{1, -1, 0, 0}, 1}, {{-1, -1, -1, -1}, 3}});
    for (int t = 0; t <= p.dim(); ++t)
        REQUIRE(sum_cohomology(a).get(t) == 0);
    const auto out = les_propagate({exact_of(a), exact_of(a), CohProfile::unknown(), p.dim()});
    CHECK(out.right.kind() == CohProfile::Kind::Exact);
    for (int t = 0; t <= p.dim(); ++t)
        CHECK(out.right.at(t) == Interval{0, 0});
}

TEST_CASE("0 -> A -> A -> 0 -> 0 with cohomology: dimensions alone only bound the cokernel")
{
    // Without the maps, h^t(C) can only be squeezed into [0, h^t(A) + h^{t+1}(A)];
    // the true value 0 must lie inside.
    const auto p = SpaceParams::make(1, 1, 1);
    const LineBundleSum a(p, {{{-2, 0, 1, -3}, 2}, {{1, 1, 0, 0}, 1}});
    const CohTable ta = sum_cohomology(a);
    const auto out = les_propagate({exact_of(a), exact_of(a), CohProfile::unknown(), p.dim()});
    for (int t = 0; t <= p.dim(); ++t) {
        CHECK(out.right.at(t).contains(0));
        CHECK(out.right.at(t) == Interval{0, ta.get(t) + ta.get(t + 1)});
    }
    CHECK(euler_consistent(out));
}

TEST_CASE("dual kernel sequence: h0(T*) is 46 for (1,2,3)")
{
    const auto p = SpaceParams::make(1, 2, 3);
    ShortExactSeq seq{exact_of(monad_source(p)), exact_of(dual(monad_middle(p))), CohProfile::unknown(), p.dim()};
    const auto out = les_propagate(seq);
    CHECK(sum_cohomology(monad_source(p)).get(0) == 0);
    CHECK(sum_cohomology(monad_source(p)).get(1) == 0);
    CHECK(out.right.at(0) == Interval{46, 46});
}

TEST_CASE("errors")
{
    const auto p = SpaceParams::make(1, 1, 1);
    const auto a = exact_of(monad_source(p));
    CHECK_THROWS_AS(les_propagate({a, a, a, p.dim()}), DomainError);
    CHECK_THROWS_AS(les_propagate({CohProfile::unknown(), CohProfile::unknown(), a, p.dim()}), DomainError);
    CHECK_THROWS_AS(les_propagate({a, a, CohProfile::unknown(), p.dim() + 1}), ShapeError);
    CHECK_THROWS_AS(CohProfile::bounds({{3, 2}}), DomainError);
    CHECK_THROWS_AS(CohProfile::bounds({{-1, 2}}), DomainError);
    CHECK(CohProfile::bounds({{2, 2}}).kind() == CohProfile::Kind::Exact);
    CHECK(CohProfile::bounds({{1, 2}}).kind() == CohProfile::Kind::Bounds);
}

TEST_CASE("propagated intervals contain the truth on random split sequences")
{
    std::mt19937_64 gen(271828);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = SpaceParams::make(1 + static_cast<int>(gen() % 2), 1 + static_cast<int>(gen() % 2), 1);
        auto random_sum = [&] {
            LineBundleSum s(p);
            const int parts = 1 + static_cast<int>(gen() % 3);
            for (int i = 0; i < parts; ++i)
                s.add({static_cast<std::int64_t>(gen() % 9) - 5, static_cast<std::int64_t>(gen() % 9) - 5,
                       static_cast<std::int64_t>(gen() % 9) - 5, static_cast<std::int64_t>(gen() % 9) - 5},
                      1 + static_cast<long>(gen() % 3));
            return s;
        };
        const auto a = random_sum();
        const auto c = random_sum();
        const auto b = direct_sum(a, c);
        const CohTable ta = sum_cohomology(a), tb = sum_cohomology(b), tc = sum_cohomology(c);
        const int which = static_cast<int>(gen() % 3);
        ShortExactSeq seq{CohProfile::exact(ta), CohProfile::exact(tb), CohProfile::exact(tc), p.dim()};
        const CohTable* truth = nullptr;
        if (which == 0) {
            seq.left = CohProfile::unknown();
            truth = &ta;
        } else if (which == 1) {
            seq.middle = CohProfile::unknown();
            truth = &tb;
        } else {
            seq.right = CohProfile::unknown();
            truth = &tc;
        }
        const auto out = les_propagate(seq);
        const CohProfile& filled = which == 0 ? out.left : which == 1 ? out.middle : out.right;
        for (int t = 0; t <= p.dim(); ++t)
            REQUIRE(filled.at(t).contains(truth->get(t)));
        REQUIRE(euler_consistent(out));
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("rank_of_E")
{
    CHECK(rank_of_E(SpaceParams::make(1, 2, 3)) == 12);
    CHECK(rank_of_E(SpaceParams::make(1, 1, 1)) == 6);
    CHECK(rank_of_E(SpaceParams::make(4, 3, 2)) == 18);
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= 3; ++k) {
                const auto p = SpaceParams::make(n, m, k);
                REQUIRE(rank_of_E(p) == invariants_of_T(p).rank - k);
            }
}

TEST_CASE("simplicity certificate")
{
    const auto p = SpaceParams::make(1, 2, 3);
    const auto cert = simplicity_certificate(p, StabilityScanConfig::defaults(p));
    CHECK(cert.conclusion == Conclusion::SimpleCertified);
    CHECK(cert.rank_E == 12);
    CHECK(cert.h0_T_dual_twisted == Interval{0, 0});
    CHECK(cert.h1_T_dual_twisted == Interval{0, 0});
    CHECK(cert.t_stable);

    const auto q = SpaceParams::make(1, 1, 1);
    CHECK(simplicity_certificate(q, StabilityScanConfig::defaults(q)).conclusion == Conclusion::SimpleCertified);

    StabilityReport forced = run_stability_scan(StabilityScanConfig::defaults(q));
    forced.counterexample = ScanEntry{1, {2, 0, 0, 0}, 2};
    const auto gated = simplicity_certificate(q, forced);
    CHECK(gated.conclusion == Conclusion::Inconclusive);
    CHECK(gated.reason == "stability scan failed");

    CHECK_THROWS_AS(simplicity_certificate(p, StabilityScanConfig::defaults(q)), DomainError);
}

TEST_CASE("both readings of the twisted middle term have vanishing cohomology")
{
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m)
            for (int k = 1; k <= 3; ++k) {
                const auto p = SpaceParams::make(n, m, k);
                const auto dual_twist = sum_cohomology(twist(dual(monad_middle(p)), {-1, -1, -1, -1}));
                const auto plain_twist = sum_cohomology(twist(monad_middle(p), {-1, -1, -1, -1}));
                for (int t = 0; t <= p.dim(); ++t) {
                    REQUIRE(dual_twist.get(t) == 0);
                    REQUIRE(plain_twist.get(t) == 0);
                }
            }
}
