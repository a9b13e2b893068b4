#pragma once

#include "troptoric/coxrees.hpp"

#include <json.hpp>

#include <string>

namespace troptoric {

using Json = nlohmann::ordered_json;

Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);

Json plfunction_to_json(const PLFunction& f);
PLFunction plfunction_from_json(const Json& j);

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);
Diagram load_diagram(const std::string& path);

Json subspace_to_json(const Subspace& s);
Json adaptedness_to_json(const AdaptednessReport& rep);
Json presentation_to_json(const ReesPresentation& rp);
Json mds_report_to_json(const MDSReport& rep);
Json primality_to_json(const PrimalityVerdict& v);

}  // namespace troptoric
