#pragma once

#include <json.hpp>
#include <string>

#include "folsurf/blowup.hpp"
#include "folsurf/dualgraph.hpp"
#include "folsurf/lattice.hpp"
#include "folsurf/numerics.hpp"
#include "folsurf/quotsing.hpp"

namespace folsurf {

using Json = nlohmann::json;

// Rationals serialize as strings "p/q" (plain "p" for integers); quadratic
// scalars as {"a", "b", "d"}.
Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json scalar_json(const Scalar& s);

Json classification_json(const SingularityClass& cls);
Json index_record_json(const IndexRecord& rec);

Json forest_json(const ResolutionForest& forest);
// Full `reduce` report: forest, root classification, discrepancies, CS audit
// and the structure check where applicable.
Json reduce_report_json(const PlaneGerm& v, const ResolutionForest& forest);
std::string forest_dot(const ResolutionForest& forest);

Json graph_json(const DualGraph& g);
DualGraph graph_from_json(const Json& j);
Json pattern_report_json(const PatternReport& rep);
Json component_class_json(const ComponentClass& cls);
std::string graph_dot(const DualGraph& g);

ExceptionalLattice lattice_from_json(const Json& j);
WeilDivisorData divisor_from_json(const Json& j, int rank);

InvariantSheet sheet_from_json(const Json& j);
Json bounds_json(const BoundsRecord& b);
Json extracted_json(const ExtractedInvariants& e);

Json quot_json(const QuotFoliation& qf);
Json chain_profile_json(const ChainProfile& p);

}  // namespace folsurf
