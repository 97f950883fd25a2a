#pragma once

#include <json.hpp>

#include <string>

#include "sqrtcmp/cmpcore.hpp"
#include "sqrtcmp/explorer.hpp"
#include "sqrtcmp/mqalg.hpp"
#include "sqrtcmp/sepbound.hpp"

// JSON uses decimal strings for every numeric value (never binary floats)
// so that reports are byte-stable across platforms. Doubles are rendered
// shortest-round-trip; big integers in plain decimal.

namespace sqrtcmp {

std::string format_double(double v);

nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CompareCertificate& c);
nlohmann::json to_json(const MinGapResult& r);
nlohmann::json to_json(const MarginScanReport& r);
nlohmann::json to_json(const std::vector<MinGapResult>& rows);

/// Canonical element form: generator list plus sparse (bitmask, coefficient)
/// pairs in ascending mask order, coefficients in decimal. Bit-exact
/// round-trip with element_from_json.
nlohmann::json to_json(const MqElement& x);
MqElement element_from_json(const nlohmann::json& j);

std::string dump_json(const nlohmann::json& j);  // stable byte layout

// CSV (header + rows, '\n' line ends, RFC-4180 quoting where needed).
// Gap tables use the fixed columns
//   n,k,rmin_log2_lo,rmin_log2_hi,witness_a,witness_b,
//   proof_bound_log2,stated_bound_log2,corollary_bound_log2
std::string to_csv(const MinGapResult& r);
std::string to_csv(const std::vector<MinGapResult>& rows);
std::string to_csv(const MarginScanReport& r);

}  // namespace sqrtcmp
