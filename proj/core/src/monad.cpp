#include "monadforge/monad.hpp"

#include <random>
#include <string>

#include "monadforge/parallel.hpp"

namespace monadforge {

namespace {

void check_block_index(int which)
{
    if (which < 1 || which > 4)
        throw DomainError("block index must be in 1..4, got " + std::to_string(which));
}

}  // namespace

PolyMatrix build_f_block(int which, const SpaceParams& params)
{
    check_block_index(which);
    static constexpr VarGroup kGroups[4] = {VarGroup::Y, VarGroup::X, VarGroup::T, VarGroup::Z};
    const long span = which <= 2 ? params.n : params.m;
    const long width = span + params.k;
    PolyMatrix block(static_cast<std::size_t>(params.k), static_cast<std::size_t>(width));
    for (long i = 0; i < params.k; ++i)
        for (long j = 0; j < width; ++j) {
            long idx = width - 1 - i - j;
            if (idx >= 0 && idx <= span)
                block.at(i, j) = Polynomial(Variable{kGroups[which - 1], static_cast<unsigned>(idx)});
        }
    return block;
}

PolyMatrix build_g_block(int which, const SpaceParams& params)
{
    check_block_index(which);
    static constexpr VarGroup kGroups[4] = {VarGroup::X, VarGroup::Y, VarGroup::Z, VarGroup::T};
    const long span = which <= 2 ? params.n : params.m;
    const long height = span + params.k;
    PolyMatrix block(static_cast<std::size_t>(height), static_cast<std::size_t>(params.k));
    for (long i = 0; i < height; ++i)
        for (long j = 0; j < params.k; ++j) {
            long idx = i - j;
            if (idx >= 0 && idx <= span)
                block.at(i, j) = Polynomial(Variable{kGroups[which - 1], static_cast<unsigned>(idx)});
        }
    return block;
}

MonadSpec assemble_monad(const SpaceParams& params)
{
    MonadSpec spec;
    spec.params = params;
    spec.source = monad_source(params);
    spec.middle = monad_middle(params);
    spec.target = monad_target(params);
    spec.f = hconcat({build_f_block(1, params), -build_f_block(2, params), build_f_block(3, params),
                      -build_f_block(4, params)});
    spec.g = vconcat({build_g_block(1, params), build_g_block(2, params), build_g_block(3, params),
                      build_g_block(4, params)});
    return spec;
}

bool verify_composition(const MonadSpec& spec)
{
    if (spec.f.cols() != spec.g.rows())
        return false;
    return matrix_mul(spec.f, spec.g).is_zero();
}

FieldPoint sample_point(const SpaceParams& params, std::uint64_t seed, std::uint64_t trial, const PrimeField& field)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 gen(seq);
    const std::uint64_t p = field.characteristic();
    FieldPoint point;
    for (int g = 0; g < 4; ++g) {
        const int dim = params.factor_dim(g);
        bool nonzero = false;
        while (!nonzero) {
            for (int i = 0; i <= dim; ++i) {
                std::uint64_t value = gen() % p;
                point[{static_cast<VarGroup>(g), static_cast<unsigned>(i)}] = value;
                nonzero = nonzero || value != 0;
            }
        }
    }
    return point;
}

namespace {

RankSample rank_at(const MonadSpec& spec, const FieldPoint& point, const PrimeField& field)
{
    return {rank_over_field(evaluate_matrix(spec.f, point, field), field),
            rank_over_field(evaluate_matrix(spec.g, point, field), field)};
}

}  // namespace

RankReport verify_maximal_rank(const MonadSpec& spec, unsigned trials, std::uint64_t seed, const PrimeField& field)
{
    if (trials == 0)
        throw DomainError("verify_maximal_rank needs at least one trial");
    RankReport report;
    report.prime = field.characteristic();
    report.seed = seed;
    report.expected = static_cast<std::size_t>(spec.params.k);
    report.trials.resize(trials);

    parallel_for(trials, [&](std::size_t i) {
        report.trials[i] = rank_at(spec, sample_point(spec.params, seed, i, field), field);
    });

    FieldPoint origin;
    for (const auto& v : all_variables(spec.params))
        origin[v] = 0;
    report.origin = rank_at(spec, origin, field);

    const FieldPoint base = sample_point(spec.params, seed, trials, field);
    for (int g = 0; g < 4; ++g) {
        FieldPoint point = base;
        for (auto& [v, value] : point)
            if (static_cast<int>(v.group) == g)
                value = 0;
        report.group_zeroed[static_cast<std::size_t>(g)] = rank_at(spec, point, field);
    }

    report.maximal = true;
    for (const auto& s : report.trials)
        if (s.rank_f != report.expected || s.rank_g != report.expected)
            report.maximal = false;
    return report;
}

namespace {

BlockGrading grade(const std::string& name, int block, const PolyMatrix& m, std::size_t r0, std::size_t r1,
                   std::size_t c0, std::size_t c1)
{
    BlockGrading out{name, block, true, {}};
    bool seen = false;
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) {
            const auto& p = m.at(i, j);
            if (p.is_zero())
                continue;
            auto d = multidegree_of(p);
            if (!d || (seen && *d != out.degree)) {
                out.homogeneous = false;
                return out;
            }
            out.degree = *d;
            seen = true;
        }
    return out;
}

}  // namespace

std::vector<BlockGrading> block_gradings(const MonadSpec& spec)
{
    const auto& p = spec.params;
    const std::size_t widths[4] = {static_cast<std::size_t>(p.n + p.k), static_cast<std::size_t>(p.n + p.k),
                                   static_cast<std::size_t>(p.m + p.k), static_cast<std::size_t>(p.m + p.k)};
    std::vector<BlockGrading> out;
    std::size_t offset = 0;
    for (int b = 0; b < 4; ++b) {
        const std::size_t end = offset + widths[b];
        if (end <= spec.f.cols())
            out.push_back(grade("f", b + 1, spec.f, 0, spec.f.rows(), offset, end));
        else
            out.push_back({"f", b + 1, false, {}});
        if (end <= spec.g.rows())
            out.push_back(grade("g", b + 1, spec.g, offset, end, 0, spec.g.cols()));
        else
            out.push_back({"g", b + 1, false, {}});
        offset = end;
    }
    return out;
}

bool floystad_check(const FloystadInput& in)
{
    const bool first = in.b >= 2 * in.c + in.k - 1 && in.b >= in.a + in.c;
    const bool second = in.b >= in.a + in.c + in.k;
    return first || second;
}

}  // namespace monadforge
