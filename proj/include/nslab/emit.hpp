#pragma once

#include <string>
#include <vector>

#include "nslab/inequality_lab.hpp"
#include "nslab/monitor.hpp"
#include "nslab/run_config.hpp"

namespace nslab {

/// 17-significant-digit scientific notation ("%.16e").
std::string fmt_sci(double v);

/// Atomic text write: temp file in the same directory, then rename.
/// Parent directories are created as needed.
void write_text_atomic(const std::string& path, const std::string& content);

/// Sibling output paths derived from the --out CSV path.
struct EmitPaths {
    std::string csv;
    std::string summary_json;
    std::string manifest;
};
EmitPaths derive_paths(const std::string& out_csv);

std::string records_csv(const std::vector<MonitorRecord>& records);
std::string run_summary_json(const RunManifest& manifest, const Monitor& monitor,
                             const std::string& status);

/// CSV + JSON summary + manifest sidecar for a simulate run.
EmitPaths emit_run(const RunManifest& manifest, const Monitor& monitor,
                   const std::string& status);

std::string ratio_report_csv(const RatioReport& report);
std::string ratio_summary_json(const RunManifest& manifest, const RatioReport& report);

/// CSV + JSON summary + manifest sidecar for a verify run.
EmitPaths emit_report(const RunManifest& manifest, const RatioReport& report);

}  // namespace nslab
