#include "monadforge/polynomial.hpp"

#include <algorithm>
#include <charconv>

#include "monadforge/prime_field.hpp"

namespace monadforge {

namespace {

constexpr char kGroupLetters[4] = {'x', 'y', 'z', 't'};

}  // namespace

Variable Variable::parse(std::string_view name)
{
    if (name.size() < 2)
        throw DomainError("invalid variable name '" + std::string(name) + "'");
    VarGroup group;
    switch (name[0]) {
    case 'x': group = VarGroup::X; break;
    case 'y': group = VarGroup::Y; break;
    case 'z': group = VarGroup::Z; break;
    case 't': group = VarGroup::T; break;
    default: throw DomainError("invalid variable name '" + std::string(name) + "'");
    }
    unsigned index = 0;
    auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || (digits.size() > 1 && digits[0] == '0'))
        throw DomainError("invalid variable name '" + std::string(name) + "'");
    return {group, index};
}

std::string Variable::name() const
{
    return kGroupLetters[static_cast<int>(group)] + std::to_string(index);
}

bool Variable::valid_for(const SpaceParams& params) const
{
    return static_cast<int>(index) <= params.factor_dim(static_cast<int>(group));
}

std::vector<Variable> all_variables(const SpaceParams& params)
{
    std::vector<Variable> vars;
    for (int g = 0; g < 4; ++g)
        for (int i = 0; i <= params.factor_dim(g); ++i)
            vars.push_back({static_cast<VarGroup>(g), static_cast<unsigned>(i)});
    return vars;
}

Monomial::Monomial(Variable v, unsigned exponent)
{
    if (exponent > 0)
        entries_.emplace_back(v, exponent);
}

Monomial Monomial::from_entries(std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial out;
    for (const auto& [v, e] : entries) {
        if (e == 0)
            continue;
        if (!out.entries_.empty() && out.entries_.back().first == v)
            out.entries_.back().second += e;
        else
            out.entries_.emplace_back(v, e);
    }
    return out;
}

unsigned Monomial::exponent(Variable v) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, const Variable& key) { return e.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

MultiDegree Monomial::multidegree() const
{
    MultiDegree d;
    for (const auto& [v, e] : entries_)
        d[static_cast<std::size_t>(v.group)] += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    // merge of two sorted lists
    Monomial out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first < j->first) {
            out.entries_.push_back(*i++);
        } else if (j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.entries_.insert(out.entries_.end(), i, a.entries_.end());
    out.entries_.insert(out.entries_.end(), j, b.entries_.end());
    return out;
}

std::string Monomial::str() const
{
    if (entries_.empty())
        return "1";
    std::string s;
    for (const auto& [v, e] : entries_) {
        if (!s.empty())
            s += '*';
        s += v.name();
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s;
}

Polynomial::Polynomial(const Integer& constant)
{
    if (constant != 0)
        terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(Variable v)
{
    terms_.emplace(Monomial(v), Integer(1));
}

Polynomial::Polynomial(const Monomial& mono, const Integer& coeff)
{
    if (coeff != 0)
        terms_.emplace(mono, coeff);
}

Integer Polynomial::coefficient(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& mono, const Integer& coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [mono, c] : o.terms_)
        add_term(mono, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial operator-(const Polynomial& a)
{
    Polynomial out = a;
    for (auto& [mono, c] : out.terms_)
        c = -c;
    return out;
}

std::uint64_t Polynomial::evaluate(const std::map<Variable, std::uint64_t>& point, const PrimeField& field) const
{
    std::uint64_t acc = 0;
    for (const auto& [mono, c] : terms_) {
        std::uint64_t value = field.reduce(c);
        for (const auto& [v, e] : mono.entries()) {
            auto it = point.find(v);
            if (it == point.end())
                throw DomainError("no value assigned to variable " + v.name());
            value = field.mul(value, field.pow(it->second % field.characteristic(), e));
        }
        acc = field.add(acc, value);
    }
    return acc;
}

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [mono, c] : terms_) {
        bool negative = c < 0;
        Integer mag = abs(c);
        if (s.empty())
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        if (mono.is_one())
            s += mag.get_str();
        else if (mag == 1)
            s += mono.str();
        else
            s += mag.get_str() + "*" + mono.str();
    }
    return s;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q)
{
    return p * q;
}

std::optional<MultiDegree> multidegree_of(const Polynomial& p)
{
    if (p.is_zero())
        return std::nullopt;
    auto it = p.terms().begin();
    MultiDegree d = it->first.multidegree();
    for (++it; it != p.terms().end(); ++it)
        if (it->first.multidegree() != d)
            return std::nullopt;
    return d;
}

}  // namespace monadforge
