#include "monadforge/chow.hpp"

#include <stdexcept>

namespace monadforge {

namespace {

ChowClass::Exponents bounds(const SpaceParams& p)
{
    return {p.n, p.n, p.m, p.m};
}

}  // namespace

ChowClass ChowClass::one(const SpaceParams& params)
{
    ChowClass c(params);
    c.add_term({0, 0, 0, 0}, 1);
    return c;
}

ChowClass ChowClass::hyperplane(const SpaceParams& params, int factor)
{
    if (factor < 0 || factor > 3)
        throw DomainError("hyperplane factor must be in 0..3");
    ChowClass c(params);
    Exponents e{0, 0, 0, 0};
    e[static_cast<std::size_t>(factor)] = 1;
    c.add_term(e, 1);
    return c;
}

ChowClass ChowClass::divisor(const SpaceParams& params, const MultiDegree& deg)
{
    ChowClass c(params);
    for (int f = 0; f < 4; ++f) {
        Exponents e{0, 0, 0, 0};
        e[static_cast<std::size_t>(f)] = 1;
        c.add_term(e, Integer(static_cast<long>(deg[static_cast<std::size_t>(f)])));
    }
    return c;
}

ChowClass ChowClass::polarization(const SpaceParams& params)
{
    return divisor(params, {1, 1, 1, 1});
}

ChowClass ChowClass::point(const SpaceParams& params)
{
    ChowClass c(params);
    c.add_term(bounds(params), 1);
    return c;
}

void ChowClass::add_term(const Exponents& e, const Integer& coeff)
{
    const auto b = bounds(params_);
    for (std::size_t i = 0; i < 4; ++i)
        if (e[i] < 0 || e[i] > b[i])
            return;
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer ChowClass::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

ChowClass& ChowClass::operator+=(const ChowClass& o)
{
    if (o.params_ != params_)
        throw DomainError("Chow classes live on different spaces");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

ChowClass& ChowClass::operator*=(const Integer& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

ChowClass ChowClass::pow(unsigned e) const
{
    ChowClass result = one(params_);
    ChowClass base = *this;
    while (e) {
        if (e & 1)
            result = chow_mul(result, base);
        e >>= 1;
        if (e)
            base = chow_mul(base, base);
    }
    return result;
}

std::string ChowClass::str() const
{
    if (terms_.empty())
        return "0";
    static constexpr char kNames[4] = {'a', 'b', 'c', 'd'};
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c.get_str();
        for (std::size_t i = 0; i < 4; ++i)
            if (e[i] > 0)
                s += std::string("*") + kNames[i] + (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
    }
    return s;
}

ChowClass chow_mul(const ChowClass& u, const ChowClass& v)
{
    if (u.params() != v.params())
        throw DomainError("Chow classes live on different spaces");
    ChowClass out(u.params());
    for (const auto& [eu, cu] : u.terms())
        for (const auto& [ev, cv] : v.terms())
            out.add_term({eu[0] + ev[0], eu[1] + ev[1], eu[2] + ev[2], eu[3] + ev[3]}, cu * cv);
    return out;
}

Integer top_coefficient(const ChowClass& u)
{
    return u.coefficient(bounds(u.params()));
}

MultiDegree c1_of_sum(const LineBundleSum& s)
{
    MultiDegree c1;
    for (const auto& [deg, mult] : s.summands())
        c1 += mult.get_si() * deg;
    return c1;
}

Integer degree_L(const MultiDegree& c1, const SpaceParams& params)
{
    const ChowClass lpow = ChowClass::polarization(params).pow(static_cast<unsigned>(params.dim() - 1));
    return top_coefficient(chow_mul(ChowClass::divisor(params, c1), lpow));
}

Integer delta_L(const MultiDegree& b, const SpaceParams& params)
{
    return degree_L(b, params);
}

BundleInvariants invariants_of_T(const SpaceParams& params)
{
    const LineBundleSum middle = monad_middle(params);
    const LineBundleSum target = monad_target(params);
    BundleInvariants inv;
    inv.rank = Integer(middle.rank() - target.rank()).get_si();
    inv.c1 = c1_of_sum(middle) - c1_of_sum(target);
    inv.degree = degree_L(inv.c1, params);
    inv.slope = Rational(inv.degree, Integer(inv.rank));
    inv.slope.canonicalize();
    if (inv.degree >= 0)
        throw std::logic_error("deg_L T is non-negative for " + std::to_string(params.n) + "," +
                               std::to_string(params.m) + "," + std::to_string(params.k));
    return inv;
}

BundleInvariants invariants_of_E(const SpaceParams& params)
{
    const BundleInvariants t = invariants_of_T(params);
    const LineBundleSum source = monad_source(params);
    BundleInvariants inv;
    inv.rank = t.rank - source.rank().get_si();
    inv.c1 = t.c1 - c1_of_sum(source);
    inv.degree = degree_L(inv.c1, params);
    inv.slope = Rational(inv.degree, Integer(inv.rank));
    inv.slope.canonicalize();
    return inv;
}

Integer printed_degree_formula_T(const SpaceParams& params)
{
    const Integer top = top_coefficient(ChowClass::polarization(params).pow(static_cast<unsigned>(params.dim())));
    return -Integer(params.n + params.m + 4 * params.k) * top;
}

}  // namespace monadforge
