#pragma once

#include <string>

#include "json.hpp"
#include "polystrip/constructions.hpp"
#include "polystrip/dual.hpp"
#include "polystrip/geometry.hpp"
#include "polystrip/hardness.hpp"
#include "polystrip/instance.hpp"
#include "polystrip/planar.hpp"

// JSON shapes:
//   instance  {"n":int,"d":int,"circular":bool,"perms":[[int,...],...]}
//   coloring  {"k":int,"colors":[int,...]}
//   points    {"d":int,"points":[[x,...],...]}
//   strips    {"d":int,"strips":[{"axis":int,"lo":f,"hi":f},...]}
namespace polystrip {

using Json = nlohmann::ordered_json;

Json to_json(const PermutationInstance& inst);
Json to_json(const Coloring& col);
Json to_json(const VerificationReport& report);
Json to_json(const PointSet& ps);
Json to_json(const StripSet& ss);
Json to_json(const DepthReport& report);
Json to_json(const TupleMultigraph& g);
Json to_json(const LowerBoundInstance& lb);
Json to_json(const ReductionOutput& r);

// All parsers throw std::invalid_argument on a missing or mistyped field.
PermutationInstance instance_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);
PointSet points_from_json(const Json& j);
StripSet strips_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace polystrip
