#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "monadforge/line_bundle_sum.hpp"
#include "monadforge/poly_matrix.hpp"
#include "monadforge/prime_field.hpp"

namespace monadforge {

/// The linear monad O(-1,-1,-1,-1)^k --f--> G_n + G_m --g--> O(1,1,1,1)^k.
///
/// f is stored exactly as displayed: k rows, 2(n+k)+2(m+k) columns, blocks [f1 | -f2 | f3 | -f4].
/// g is the stack [g1; g2; g3; g4], so the composition is the k x k product f * g.
struct MonadSpec {
    SpaceParams params;
    LineBundleSum source;
    LineBundleSum middle;
    LineBundleSum target;
    PolyMatrix f;
    PolyMatrix g;
};

/// Hankel block f_which (1..4): k x (n+k) for blocks 1,2 and k x (m+k) for blocks 3,4.
/// Entry (i,j) is v_{s-1-i-j} with s = n+k (resp. m+k), and zero when the index leaves 0..n (resp. 0..m).
/// Variables: block 1 y, block 2 x, block 3 t, block 4 z.
PolyMatrix build_f_block(int which, const SpaceParams& params);

/// Toeplitz block g_which (1..4): entry (i,j) is v_{i-j} when 0 <= i-j <= n (resp. m).
/// Variables: block 1 x, block 2 y, block 3 z, block 4 t.
PolyMatrix build_g_block(int which, const SpaceParams& params);

MonadSpec assemble_monad(const SpaceParams& params);

/// Symbolic check that f * g vanishes identically.
bool verify_composition(const MonadSpec& spec);

struct RankSample {
    std::size_t rank_f = 0;
    std::size_t rank_g = 0;
};

struct RankReport {
    std::uint64_t prime = 0;
    std::uint64_t seed = 0;
    std::size_t expected = 0;                 // k
    std::vector<RankSample> trials;           // all coordinate groups nonzero
    RankSample origin;                        // all coordinates zero
    std::array<RankSample, 4> group_zeroed{};  // one coordinate group set to zero; diagnostic only
    bool maximal = false;
};

/// Monte Carlo certificate that f and g have rank k away from the irrelevant locus.
/// Trial i draws its point from (seed, i) alone, so reports do not depend on scheduling.
RankReport verify_maximal_rank(const MonadSpec& spec, unsigned trials, std::uint64_t seed,
                               const PrimeField& field = PrimeField{});

/// Random point with every coordinate group nonzero, derived deterministically from (seed, trial).
FieldPoint sample_point(const SpaceParams& params, std::uint64_t seed, std::uint64_t trial, const PrimeField& field);

/// Grading diagnostics: each f/g block must be homogeneous of a single multidegree.
struct BlockGrading {
    std::string matrix;  // "f" or "g"
    int block = 0;       // 1..4
    bool homogeneous = false;
    MultiDegree degree;
};

std::vector<BlockGrading> block_gradings(const MonadSpec& spec);

/// Existence test for linear monads O(-1)^a -> O^b -> O(1)^c on P^k.
struct FloystadInput {
    long a = 0;
    long b = 0;
    long c = 0;
    long k = 1;
};

bool floystad_check(const FloystadInput& in);

}  // namespace monadforge
