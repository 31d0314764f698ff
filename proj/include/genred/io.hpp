#pragma once

#include <json.hpp>

#include "genred/generic_group.hpp"

namespace genred {

using Json = nlohmann::json;

// Integers are emitted as JSON numbers up to 2^53 and as decimal strings
// beyond; both forms parse back.
Json int_to_json(const Int& v);
Int json_to_int(const Json& j);

Json mat_to_json(const IntMat& m);
IntMat json_to_mat(const Json& j);

// DatumFile: { rank, base_size, A, Acheck, name? } or a catalog reference
// { catalog: "SL", param: 3 } / { type: "G2", form: "ad"|"sc" }.
Json datum_to_json(const RootDatum& D, const std::string& name = "");
RootDatum json_to_datum(const Json& j);

// IsogenyFile: { p, P, Pcirc, source, target }
Json isogeny_to_json(const PIsogeny& f);
PIsogeny json_to_isogeny(const Json& j);

// CompleteFile: { datum, phi0_num, phi0_rad, phi0_den, phi0_sqrt_num? }
Json complete_to_json(const CompleteRootDatum& crd);
CompleteRootDatum json_to_complete(const Json& j);

Json quadnum_to_json(const QuadNum& q);
Json qpoly_to_json(const QPoly& f);

// q literal of the form "p^a" or "p^a/2" (also plain integers like "8").
QuadNum parse_q(const std::string& text);
std::string q_to_string(const QuadNum& q);

}  // namespace genred
