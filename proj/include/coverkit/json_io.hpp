#pragma once

#include "json.hpp"

#include "coverkit/fpgroup.hpp"
#include "coverkit/fpgroups.hpp"
#include "coverkit/monodromy.hpp"
#include "coverkit/moves.hpp"
#include "coverkit/snf.hpp"

namespace coverkit {

// ordered_json keeps insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json diagram_to_json(const LinkDiagram& d);
// Accepts either a built-in name string or a full diagram object.
LinkDiagram diagram_from_json(const Json& j);

Json monodromy_to_json(const Monodromy& m);
Monodromy monodromy_from_json(const Json& j);

Json abelian_to_json(const AbelianInvariants& ab);
Json report_to_json(const CoverReport& r);
Json fpgroup_to_json(const FpGroup& g);
Json certificate_to_json(const MoveCertificate& c);
Json triviality_to_json(const TrivialityReport& r);

}  // namespace coverkit
