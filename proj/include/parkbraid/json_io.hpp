#pragma once

// JSON forms: {"n": n, "f": [...]}, {"n": n, "basis": [[lo, hi], ...]},
// {"n": n, "chain": [[[...], ...], ...]}.

#include <string>

#include <json.hpp>

#include "parkbraid/noncrossing.hpp"
#include "parkbraid/parking.hpp"

namespace parkbraid {

using Json = nlohmann::ordered_json;

/// Throws Error("parse_error").
Json parse_json(const std::string& text);

Json to_json(const Root& r);
Json to_json(const ParkingFunction& f);
Json to_json(const DistinguishedBasis& a);
Json to_json(const NCChain& c);

ParkingFunction pf_from_json(const Json& j);
DistinguishedBasis basis_from_json(const Json& j);
NCChain chain_from_json(const Json& j);

/// Reads whichever of "basis" or "f" is present, converting a parking
/// function through reconstruct.
DistinguishedBasis any_basis_from_json(const Json& j);

}  // namespace parkbraid
