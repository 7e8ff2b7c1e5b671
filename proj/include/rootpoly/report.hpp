#pragma once

#include "rootpoly/arrangement.hpp"
#include "rootpoly/triangulate.hpp"

#include "json.hpp"

#include <string>

// JSON payloads for the command-line surface.  Keys are emitted sorted (the
// default object ordering), so serialization is byte-deterministic.

namespace rootpoly {

inline constexpr const char* artifact_version = "1.0.0";

// {"family": "A", "rank": 3, "version": ...}
nlohmann::json meta_block(const RootSystem& rs);

// Full summary payload: counts, f-vector, volumes, arrangement data.
nlohmann::json report_payload(const RootSystem& rs);

// Simplices of the full (or positive-restricted) triangulation.
nlohmann::json triangulation_payload(const RootSystem& rs, bool positive_only);

// Hyperplanes, characteristic polynomial, region count, poset size.
nlohmann::json arrangement_payload(const RootSystem& rs);

nlohmann::json simplex_to_json(const RootSystem& rs, const Simplex& s);

// ASCII staircase: ideal cells '#', border cells '@', the rest '.'.
std::string render_diagram(const RootSystem& rs, const RootFilter& ideal);

// Log line gated by the ROOTPOLY_LOG environment variable (any nonempty
// value enables; written to stderr).
void log_line(const std::string& msg);

}  // namespace rootpoly
