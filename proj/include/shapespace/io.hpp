#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shapespace/curve.hpp"
#include "shapespace/elastic.hpp"
#include "shapespace/optimizer.hpp"
#include "shapespace/paths.hpp"

namespace shapespace {

// ============================================================================
// File formats. Per-sample data is CSV, structured records are JSON.
// Doubles are serialized with 17 significant digits so that every value
// round-trips bit-exactly. Malformed input throws std::invalid_argument
// naming the offending file and row.
// ============================================================================

// Serializes a double so it parses back to the identical bits.
std::string format_double(double value);

// Curve CSV: header "x,y", one sample per row. Closedness travels in a
// sidecar JSON file `<path>.json` of the form {"closed": bool, "n": N};
// `closed_override` (e.g. from a CLI flag) takes precedence. Missing both
// is an error.
void write_curve_csv(const std::string& path, const SampledCurve& curve,
                     bool with_sidecar = true);
SampledCurve read_curve_csv(const std::string& path,
                            std::optional<bool> closed_override = std::nullopt);

// Tangent-field CSV: header "hx,hy", N rows, paired with a curve file.
void write_field_csv(const std::string& path, const TangentField& field);
TangentField read_field_csv(const std::string& path);

// Path JSON: {"n": N, "k": K, "closed": bool, "slices": [[[x,y],...], ...]}.
void write_path_json(const std::string& path, const CurvePath& curve_path);
CurvePath read_path_json(const std::string& path);

// Optimizer trace CSV: header "iter,energy,gradnorm,step".
void write_trace_csv(const std::string& path, const OptimizerTrace& trace);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace shapespace
