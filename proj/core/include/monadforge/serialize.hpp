#pragma once

#include <string>

#include <json.hpp>

#include "monadforge/chow.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/les.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/poly_matrix.hpp"
#include "monadforge/polynomial.hpp"
#include "monadforge/stability.hpp"

namespace monadforge {

using Json = nlohmann::ordered_json;

/// Thrown for documents that do not match the expected schema.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Big integers travel as decimal strings; rationals as "p/q".
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);
std::string rational_string(const Rational& q);

Json to_json(const SpaceParams& p);
SpaceParams params_from_json(const Json& j);

Json to_json(const MultiDegree& d);
MultiDegree multidegree_from_json(const Json& j);

/// [{"coeff": "-1", "exps": {"x0": 1, "y1": 2}}, ...] in canonical term order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[poly, ...], ...]}
Json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

/// [{"degree": [a,b,c,d], "multiplicity": "r"}, ...]
Json to_json(const LineBundleSum& s);
LineBundleSum line_bundle_sum_from_json(const Json& j, const SpaceParams& params);

/// {"params", "source", "middle", "target", "f", "g"}
Json to_json(const MonadSpec& spec);
MonadSpec monad_from_json(const Json& j);

/// {"0": "dim", "1": ...}
Json to_json(const CohTable& t);
Json to_json(const Interval& iv);
Json to_json(const CohProfile& p);
Json to_json(const ShortExactSeq& s);

Json to_json(const RankReport& r);
Json to_json(const BundleInvariants& inv);

/// `include_entries` = false keeps the counts and the counterexample but drops the per-twist list.
Json to_json(const StabilityReport& r, bool include_entries = true);
Json to_json(const SimplicityCertificate& c, bool include_scan_entries = false);

}  // namespace monadforge
