#pragma once

#include <json.hpp>

#include "admcube/adjugates.hpp"
#include "admcube/bue.hpp"
#include "admcube/lattices.hpp"

namespace admcube {

using Json = nlohmann::json;

// --- serialization (keys are emitted sorted; entry text is bit-exact) ---

Json ring_to_json(const Ring& r);
Ring ring_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& ring, const Json& j);

Json module_to_json(const FPModule& m);
FPModule module_from_json(const Ring& ring, const Json& j);

Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Ring& ring, const Json& j);

Json cube_to_json(const Cube& x);
Cube cube_from_json(const Ring& ring, const Json& j);

Json double_cube_to_json(const DoubleCube& x);
DoubleCube double_cube_from_json(const Ring& ring, const Json& j);

Json adjugate_to_json(const CubeIndex& idx, const CubeAdjugate& a);
CubeAdjugate adjugate_from_json(const Cube& x, const Json& j);

// One instance file: {"ring": ..., "kind": ..., ...payload}. Unknown kinds
// and unknown keys are rejected before dispatch.
struct Instance {
    Ring ring;
    std::string kind;
    Json payload;  // the full object (for kind-specific readers)
};
Instance parse_instance(const Json& j);

// FNV-1a digest of the input bytes, for byte-deterministic reports.
std::string digest_hex(const std::string& bytes);

// helper for strict schemas
void require_keys(const Json& j, const std::vector<std::string>& allowed,
                  const std::string& context);

}  // namespace admcube
