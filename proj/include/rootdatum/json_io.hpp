#pragma once

#include <json.hpp>

#include "rootdatum/cgroup.hpp"
#include "rootdatum/satake.hpp"

namespace rootdatum {

// nlohmann::json keeps object keys sorted, which the deterministic-output
// contract of the CLI relies on. Rationals are serialized as canonical "a/b"
// strings, integers as JSON numbers (all values here fit 64 bits).
using Json = nlohmann::json;

Json to_json(const IVec& v);
Json to_json(const QVec& v);
Json to_json(const IMat& m);
Json to_json(const QMat& m);
Json to_json(const LatticeMap& m);
Json to_json(const GroupData& g);
Json to_json(const InfinitesimalParameter& p);
Json to_json(const GL2FamilySpec& f);
Json to_json(const SqrtPScalar& s);
Json to_json(const SatakeParamGL& s);
Json to_json(const AlgebraicityFlags& f);
Json to_json(const ExtensionPackage& pkg);

IVec ivec_from_json(const Json& j);
QVec qvec_from_json(const Json& j);
IMat imat_from_json(const Json& j);
GroupData group_from_json(const Json& j);
InfinitesimalParameter parameter_from_json(const Json& j);
GL2FamilySpec family_from_json(const Json& j);
SqrtPScalar sqrtp_from_json(const Json& j, long long p);
SatakeParamGL satake_from_json(const Json& j);

// {"error": {"code": ..., "message": ...}}
Json error_json(const Error& e);

// Parse with JSON-shape failures rethrown as Error("bad_json", ...).
Json parse_json_text(const std::string& text);

}  // namespace rootdatum
