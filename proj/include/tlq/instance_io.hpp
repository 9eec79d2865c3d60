#pragma once

#include <string>

#include <json.hpp>

#include "tlq/pairing.hpp"

namespace tlq {

using Json = nlohmann::ordered_json;

/// Instance document: {"n": int, "field": {...}, "u": [...], "v": [...],
/// "branch": "+"|"-"}. Field configs: {"kind": "ratfunc-sigma"},
/// {"kind": "quadext", "delta": "<polynomial in s>"}, or
/// {"kind": "complex", "bits": N} (rejected here; exact kinds only).
TLInstance load_instance(const Json& doc);
TLInstance load_instance_file(const std::string& path);

Json field_config_json(const Field& f);

/// Canonical echo: the validated inputs plus derived data (z, m, lambda,
/// scalar flag), all elements in canonical string form.
Json echo_instance(const TLInstance& inst);

/// Parses "q*t[1,1]*t[2,2] - t[1,2]*t[2,1]" style combinations; scalar
/// factors use the field element grammar, generators are t[i,j] with
/// 1-based indices bounded by n.
LinComb parse_lincomb(const Field& f, int n, const std::string& text);

}  // namespace tlq
