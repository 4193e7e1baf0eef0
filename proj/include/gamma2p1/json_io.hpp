#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gamma2p1/clifford.hpp"
#include "gamma2p1/intertwiner.hpp"
#include "gamma2p1/report.hpp"
#include "gamma2p1/spinors.hpp"
#include "gamma2p1/transforms.hpp"

namespace gamma2p1 {

using json = nlohmann::ordered_json;

inline constexpr const char* kRepSchema = "gamma-rep/1";

/// Serializable representation document: SO(3) rows plus the gammas they
/// generate, with a provenance tag.
struct RepDocument {
    GammaRep rep;
    std::string provenance;  // preset:..., euler, quaternion, explicit, random(seed)
};

json to_json(const Mat2& m);
Mat2 mat2_from_json(const json& j);

json to_json(const RepDocument& doc);

/// Parses and rebuilds; rejects unknown schema versions and documents whose
/// embedded gammas disagree with the SO(3) rows beyond 1e-12.
RepDocument rep_document_from_json(const json& j);

json to_json(const VerificationReport& report);
json to_json(const PlaneWaveSolution& sol, const GammaRep& rep);
json to_json(const BoostOp& b);
json to_json(const ParityOp& p);
json to_json(const IntertwinerResult& res);

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

}  // namespace gamma2p1
