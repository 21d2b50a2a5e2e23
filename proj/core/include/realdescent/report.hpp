#pragma once

#include "realdescent/descent.hpp"

#include <string>

namespace realdescent {

std::string branch_name(Branch branch);
std::string w_kind_name(WKind kind);

// Human-readable report.  Deterministic for a fixed report; pass timings
// only when wall-clock measurements were requested.
std::string render_text(const DescentReport& report,
                        const StageTimings* timings = nullptr);

// Machine-readable report with stable key order.  Top-level keys: branch,
// field, z_generators, r_components, w_status, certificates, notes, and
// (only when provided) timings in integer microseconds.
std::string render_json(const DescentReport& report,
                        const StageTimings* timings = nullptr);

} // namespace realdescent
