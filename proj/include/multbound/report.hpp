// JSON and CSV renderings of sweep results.

#pragma once

#include <string>

#include "multbound/sweep.hpp"

namespace multbound {

inline constexpr int kReportSchema = 1;

/// Full report. The generation timestamp is omitted when `reproducible`.
std::string report_json(const SweepReport& report, bool reproducible);
/// One row per group and bound, then one row per group and property.
std::string report_csv(const SweepReport& report);
/// A single entry in the report's per-entry JSON shape.
std::string entry_json(const EntryResult& entry);

}  // namespace multbound
