#pragma once

// JSON forms of problem instances and certificates. All integers are decimal
// strings. Instance files carry "schema": "phi-irred/1"; certificates carry
// "schema": "phi-irred-cert/1".

#include "phiirred/certifier.hpp"

#include "json.hpp"

namespace phiirred {

inline constexpr const char* kInstanceSchema = "phi-irred/1";

/// Canonical form; also the certificate's "instance" block.
nlohmann::json instance_to_json(const ProblemInstance& inst);

/// Parses an instance file. A nonconstant polynomial a_n throws
/// PolynomialLeadingCoefficient; other malformed input throws
/// std::invalid_argument. The returned instance is validated.
ProblemInstance instance_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const NewtonPolygon& np);

}  // namespace phiirred
