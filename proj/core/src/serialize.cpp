#include "monadforge/serialize.hpp"

namespace monadforge {

namespace {

const Json& require(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int small_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        throw FormatError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

Json to_json(const Integer& z)
{
    return z.get_str();
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (!j.is_string())
        throw FormatError("integer must be a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0)
        throw FormatError("invalid decimal integer '" + s + "'");
    return z;
}

std::string rational_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json to_json(const SpaceParams& p)
{
    return Json{{"n", p.n}, {"m", p.m}, {"k", p.k}};
}

SpaceParams params_from_json(const Json& j)
{
    try {
        return SpaceParams::make(small_int(require(j, "n"), "n"), small_int(require(j, "m"), "m"),
                                 small_int(require(j, "k"), "k"));
    } catch (const DomainError& e) {
        throw FormatError(e.what());
    }
}

Json to_json(const MultiDegree& d)
{
    return Json::array({d[0], d[1], d[2], d[3]});
}

MultiDegree multidegree_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 4)
        throw FormatError("multidegree must be an array of four integers");
    MultiDegree d;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!j[i].is_number_integer())
            throw FormatError("multidegree entries must be integers");
        d[i] = j[i].get<std::int64_t>();
    }
    return d;
}

Json to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.terms()) {
        Json exps = Json::object();
        for (const auto& [v, e] : mono.entries())
            exps[v.name()] = e;
        terms.push_back(Json{{"coeff", coeff.get_str()}, {"exps", std::move(exps)}});
    }
    return terms;
}

Polynomial polynomial_from_json(const Json& j)
{
    if (!j.is_array())
        throw FormatError("polynomial must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        const Integer coeff = integer_from_json(require(term, "coeff"));
        const Json& exps = require(term, "exps");
        if (!exps.is_object())
            throw FormatError("'exps' must be an object");
        std::vector<Monomial::Entry> entries;
        for (const auto& [name, e] : exps.items()) {
            if (!e.is_number_unsigned())
                throw FormatError("exponent of " + name + " must be a non-negative integer");
            try {
                entries.emplace_back(Variable::parse(name), e.get<unsigned>());
            } catch (const DomainError& err) {
                throw FormatError(err.what());
            }
        }
        p.add_term(Monomial::from_entries(std::move(entries)), coeff);
    }
    return p;
}

Json to_json(const PolyMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

PolyMatrix poly_matrix_from_json(const Json& j)
{
    const Json& rj = require(j, "rows");
    const Json& cj = require(j, "cols");
    if (!rj.is_number_unsigned() || !cj.is_number_unsigned())
        throw FormatError("matrix shape must be non-negative integers");
    const auto rows = rj.get<std::size_t>();
    const auto cols = cj.get<std::size_t>();
    const Json& entries = require(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw FormatError("matrix must have " + std::to_string(rows) + " rows of entries");
    std::vector<Polynomial> flat;
    flat.reserve(rows * cols);
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw FormatError("every matrix row must have " + std::to_string(cols) + " entries");
        for (const auto& p : row)
            flat.push_back(polynomial_from_json(p));
    }
    return PolyMatrix(rows, cols, std::move(flat));
}

Json to_json(const LineBundleSum& s)
{
    Json out = Json::array();
    for (const auto& [deg, mult] : s.summands())
        out.push_back(Json{{"degree", to_json(deg)}, {"multiplicity", mult.get_str()}});
    return out;
}

LineBundleSum line_bundle_sum_from_json(const Json& j, const SpaceParams& params)
{
    if (!j.is_array())
        throw FormatError("line bundle sum must be an array");
    LineBundleSum s(params);
    for (const auto& item : j) {
        try {
            s.add(multidegree_from_json(require(item, "degree")), integer_from_json(require(item, "multiplicity")));
        } catch (const DomainError& e) {
            throw FormatError(e.what());
        }
    }
    return s;
}

Json to_json(const MonadSpec& spec)
{
    return Json{{"params", to_json(spec.params)}, {"source", to_json(spec.source)},
                {"middle", to_json(spec.middle)}, {"target", to_json(spec.target)},
                {"f", to_json(spec.f)},           {"g", to_json(spec.g)}};
}

MonadSpec monad_from_json(const Json& j)
{
    MonadSpec spec;
    spec.params = params_from_json(require(j, "params"));
    spec.source = line_bundle_sum_from_json(require(j, "source"), spec.params);
    spec.middle = line_bundle_sum_from_json(require(j, "middle"), spec.params);
    spec.target = line_bundle_sum_from_json(require(j, "target"), spec.params);
    spec.f = poly_matrix_from_json(require(j, "f"));
    spec.g = poly_matrix_from_json(require(j, "g"));
    return spec;
}

Json to_json(const CohTable& t)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < t.dims.size(); ++i)
        out[std::to_string(i)] = t.dims[i].get_str();
    return out;
}

Json to_json(const Interval& iv)
{
    return Json::array({iv.lo.get_str(), iv.hi.get_str()});
}

Json to_json(const CohProfile& p)
{
    switch (p.kind()) {
    case CohProfile::Kind::Unknown:
        return Json{{"kind", "unknown"}};
    case CohProfile::Kind::Exact:
        return Json{{"kind", "exact"}, {"table", to_json(*p.table())}};
    case CohProfile::Kind::Bounds: {
        Json iv = Json::object();
        for (std::size_t i = 0; i < p.intervals().size(); ++i)
            iv[std::to_string(i)] = to_json(p.intervals()[i]);
        return Json{{"kind", "interval"}, {"intervals", std::move(iv)}};
    }
    }
    return {};
}

Json to_json(const ShortExactSeq& s)
{
    return Json{{"dim_top", s.dim_top},
                {"left", to_json(s.left)},
                {"middle", to_json(s.middle)},
                {"right", to_json(s.right)}};
}

Json to_json(const RankReport& r)
{
    auto sample = [](const RankSample& s) { return Json{{"rank_f", s.rank_f}, {"rank_g", s.rank_g}}; };
    Json trials = Json::array();
    for (const auto& s : r.trials)
        trials.push_back(sample(s));
    Json zeroed = Json::object();
    static constexpr const char* kGroups[4] = {"x", "y", "z", "t"};
    for (std::size_t g = 0; g < 4; ++g)
        zeroed[kGroups[g]] = sample(r.group_zeroed[g]);
    return Json{{"prime", r.prime},
                {"seed", r.seed},
                {"expected_rank", r.expected},
                {"trials", std::move(trials)},
                {"origin", sample(r.origin)},
                {"group_zeroed", std::move(zeroed)},
                {"verdict", r.maximal ? "maximal" : "not_maximal"}};
}

Json to_json(const BundleInvariants& inv)
{
    return Json{{"rank", inv.rank},
                {"c1", to_json(inv.c1)},
                {"degree", inv.degree.get_str()},
                {"slope", rational_string(inv.slope)}};
}

namespace {

Json entry_json(const ScanEntry& e)
{
    return Json{{"q", e.q}, {"twist", to_json(e.twist)}, {"h0", e.h0.get_str()}};
}

}  // namespace

Json to_json(const StabilityReport& r, bool include_entries)
{
    Json cfg{{"max_q", r.config.max_q},
             {"max_psum", r.config.max_psum},
             {"min_psum", r.config.min_psum},
             {"component_bound", r.config.component_bound}};
    Json out{{"params", to_json(r.config.params)},
             {"config", std::move(cfg)},
             {"checked_count", r.checked.size()},
             {"negative_component_invariant", r.negative_component_invariant}};
    if (r.counterexample)
        out["verdict"] = Json{{"kind", "COUNTEREXAMPLE"}, {"entry", entry_json(*r.counterexample)}};
    else
        out["verdict"] = Json{{"kind", "ALL_VANISH"}};
    if (include_entries) {
        Json list = Json::array();
        for (const auto& e : r.checked)
            list.push_back(entry_json(e));
        out["checked"] = std::move(list);
    }
    return out;
}

Json to_json(const SimplicityCertificate& c, bool include_scan_entries)
{
    Json out{{"params", to_json(c.params)},
             {"rank_E", c.rank_E},
             {"rank_T", c.rank_T},
             {"h0_T_dual_twisted", to_json(c.h0_T_dual_twisted)},
             {"h1_T_dual_twisted", to_json(c.h1_T_dual_twisted)},
             {"t_stable", c.t_stable},
             {"composition_zero", c.composition_zero}};
    out["conclusion"] = c.conclusion == Conclusion::SimpleCertified ? "SIMPLE_CERTIFIED" : "INCONCLUSIVE";
    if (!c.reason.empty())
        out["reason"] = c.reason;
    out["dual_sequence"] = Json{{"left", to_json(c.sequence_left)},
                                {"middle", to_json(c.sequence_middle)},
                                {"right", "T*(-1,-1,-1,-1)"},
                                {"cohomology", to_json(c.propagated)}};
    out["stability"] = to_json(c.stability, include_scan_entries);
    out["endomorphisms"] =
        "h0(E x E*) = 1 follows from h0(T x T*) = 1 (T stable, hence simple) and the two vanishings above";
    return out;
}

}  // namespace monadforge
