/* JSON wire formats for all public value types. Keys are emitted in sorted
 * order so serialized reports are reproducible byte-for-byte. */
#pragma once

#include <json.hpp>

#include "dynshaf/harness.hpp"

namespace dynshaf {

using json = nlohmann::json;

json to_json(const PrimeSet& s);
PrimeSet primeset_from_json(const json& j);

json to_json(const ProjPoint& x);
ProjPoint point_from_json(const json& j);

json to_json(const PointSet& x);
PointSet pointset_from_json(const json& j);
/// Points in file order (for ordered-frame input).
std::vector<ProjPoint> point_list_from_json(const json& j);

json to_json(const GoodReductionReport& r);

json to_json(const ProjLinearMap& phi);
ProjLinearMap map_from_json(const json& j);

json to_json(const HomogeneousForm& f);
HomogeneousForm form_from_json(const json& j, int dimension);

json to_json(const Morphism& f);
Morphism morphism_from_json(const json& j);

json to_json(const Triple& t);
Triple triple_from_json(const json& j);

json to_json(const SUnitSolutionSet& sols);
json to_json(const CandidateSet& pi);
json to_json(const MembershipReport& r);
json to_json(const CensusResult& r);

json to_json(const InterpolationResult& r);

/// Integers are emitted as JSON numbers when they fit, decimal strings
/// otherwise.
json int_to_json(const Int& n);

}  // namespace dynshaf
