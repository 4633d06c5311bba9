#pragma once

#include <string>

#include <json.hpp>

#include "weylmodes/verify.hpp"

namespace weylmodes::report {

// All machine-readable floats go through this: 12 significant digits,
// which round-trips byte-stably through parse/re-render.
std::string format_double(double v);

// Canonical byte rendering of a JSON document: compact separators,
// insertion key order, format_double for floats.
std::string render_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json json_from_vec(const Vec& v);

// Per-system payload with the stable report schema.
nlohmann::ordered_json system_report_json(const verify::SystemReport& sr,
                                          const rootsys::Coupling& g);

nlohmann::ordered_json verification_json(const verify::VerificationReport& vr,
                                         const rootsys::Coupling& g);

// Plain-text rendering: one line per (system, check) with computed vs
// predicted values.
std::string verification_text(const verify::VerificationReport& vr, double tol);

// One row per system; RFC-4180 quoting, list cells joined with ';'.
std::string table_csv(const verify::VerificationReport& vr);
nlohmann::ordered_json table_json(const verify::VerificationReport& vr);

} // namespace weylmodes::report
