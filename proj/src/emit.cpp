#include "nslab/emit.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "nslab/errors.hpp"

namespace nslab {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// JSON has no inf; infinite values (beta on boundary tuples) become strings.
json json_number(double v) {
    if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
    return json(v);
}

json config_echo(const RunManifest& m) {
    json cfg = json::object();
    for (const auto& [k, v] : m.entries) cfg[k] = v;
    return cfg;
}

}  // namespace

std::string fmt_sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

void write_text_atomic(const std::string& path, const std::string& content) {
    const fs::path target(path);
    try {
        if (target.has_parent_path()) fs::create_directories(target.parent_path());
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw io_error("cannot open for writing", tmp.string());
            os.write(content.data(), static_cast<std::streamsize>(content.size()));
            if (!os) throw io_error("write failed", tmp.string());
        }
        fs::rename(tmp, target);
    } catch (const fs::filesystem_error& e) {
        throw io_error(std::string("filesystem error: ") + e.what(), path);
    }
}

EmitPaths derive_paths(const std::string& out_csv) {
    std::string base = out_csv;
    const std::string ext = ".csv";
    if (base.size() > ext.size() && base.substr(base.size() - ext.size()) == ext)
        base.erase(base.size() - ext.size());
    return EmitPaths{out_csv, base + ".summary.json", base + ".manifest.txt"};
}

std::string records_csv(const std::vector<MonitorRecord>& records) {
    std::string out =
        "t,energy,grad_sq,d3u_sq,grad_d3u_sq,mixed,beta,integrand,cumulative,F,"
        "trilinear,h1_trilinear,audit24_a,audit24_b,audit210_lhs,audit210_rhs\n";
    for (const auto& r : records) {
        out += fmt_sci(r.t) + "," + fmt_sci(r.energy) + "," + fmt_sci(r.grad_sq) + "," +
               fmt_sci(r.d3u_sq) + "," + fmt_sci(r.grad_d3u_sq) + "," + fmt_sci(r.mixed) +
               "," + fmt_sci(r.beta) + "," + fmt_sci(r.integrand) + "," +
               fmt_sci(r.cumulative) + "," + fmt_sci(r.F) + "," + fmt_sci(r.trilinear) +
               "," + fmt_sci(r.h1_trilinear) + "," + fmt_sci(r.audit24_a) + "," +
               fmt_sci(r.audit24_b) + "," + fmt_sci(r.audit210_lhs) + "," +
               fmt_sci(r.audit210_rhs) + "\n";
    }
    return out;
}

std::string run_summary_json(const RunManifest& manifest, const Monitor& monitor,
                             const std::string& status) {
    const auto& recs = monitor.records();
    json j;
    j["subcommand"] = manifest.subcommand;
    j["version"] = kToolVersion;
    j["status"] = status;
    j["config"] = config_echo(manifest);
    j["criterion_mode"] = monitor.sup_mode() ? "sup-boundary" : "integral";
    j["samples"] = recs.size();
    j["final_cumulative"] = json_number(monitor.final_cumulative());
    j["max_integrand"] = json_number(monitor.max_integrand());
    const auto n = static_cast<int>(recs.size());
    json audits;
    audits["holder_24"] = {{"pass", n - monitor.audit24_failures()},
                           {"fail", monitor.audit24_failures()}};
    audits["interpolation_210"] = {{"pass", n - monitor.audit210_failures()},
                                   {"fail", monitor.audit210_failures()}};
    const int energy_checked = n > 0 ? n - 1 : 0;  // vs the initial record
    audits["energy_inequality"] = {{"pass", energy_checked - monitor.energy_inequality_failures()},
                                   {"fail", monitor.energy_inequality_failures()}};
    j["audits"] = audits;
    return j.dump(2) + "\n";
}

EmitPaths emit_run(const RunManifest& manifest, const Monitor& monitor,
                   const std::string& status) {
    const EmitPaths paths = derive_paths(manifest.get("out"));
    write_text_atomic(paths.csv, records_csv(monitor.records()));
    write_text_atomic(paths.summary_json, run_summary_json(manifest, monitor, status));
    write_text_atomic(paths.manifest, manifest.serialize());
    return paths;
}

std::string ratio_report_csv(const RatioReport& report) {
    std::string out = "sample,ratio,lhs,rhs,grid\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.sample) + "," + fmt_sci(row.ratio) + "," +
               fmt_sci(row.lhs) + "," + fmt_sci(row.rhs) + "," + std::to_string(row.grid_n) +
               "\n";
    }
    return out;
}

std::string ratio_summary_json(const RunManifest& manifest, const RatioReport& report) {
    json j;
    j["subcommand"] = manifest.subcommand;
    j["version"] = kToolVersion;
    j["config"] = config_echo(manifest);
    j["family"] = report.family;
    j["samples"] = report.samples;
    j["grids"] = report.grids;
    json sups = json::array();
    for (double s : report.sup_per_grid) sups.push_back(json_number(s));
    j["sup_per_grid"] = sups;
    j["sup"] = json_number(report.sup);
    j["drift"] = json_number(report.drift);
    return j.dump(2) + "\n";
}

EmitPaths emit_report(const RunManifest& manifest, const RatioReport& report) {
    const EmitPaths paths = derive_paths(manifest.get("out"));
    write_text_atomic(paths.csv, ratio_report_csv(report));
    write_text_atomic(paths.summary_json, ratio_summary_json(manifest, report));
    write_text_atomic(paths.manifest, manifest.serialize());
    return paths;
}

}  // namespace nslab
