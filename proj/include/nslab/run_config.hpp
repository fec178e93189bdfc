#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nslab {

inline constexpr const char* kToolVersion = "0.1.0";

/// Fully resolved configuration of one CLI invocation: every key has a value
/// (defaults materialized), serialized alongside every output. A manifest
/// file is itself a valid --config file, so outputs can be reproduced from it.
struct RunManifest {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> entries;  // canonical order

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    double get_double(const std::string& key) const;
    int get_int(const std::string& key) const;
    unsigned long long get_u64(const std::string& key) const;
    bool get_on_off(const std::string& key) const;

    std::string serialize() const;
};

/// Flat key=value file with '#' comments and blank lines.
std::map<std::string, std::string> parse_kv_file(const std::string& path);

/// Merge defaults <- config file <- flags for one subcommand, normalize the
/// values, and validate. Unknown config-file keys are rejected ("subcommand"
/// must match when present; "version" is accepted and ignored).
RunManifest resolve_manifest(const std::string& subcommand,
                             const std::map<std::string, std::string>& flag_values,
                             const std::string& config_path);

/// Keys of a subcommand in canonical order, with defaults.
const std::vector<std::pair<std::string, std::string>>& subcommand_defaults(
    const std::string& subcommand);

/// "inf" (any case) or a positive real.
double parse_exponent(const std::string& s);

double parse_double_strict(const std::string& s, const std::string& what);
long long parse_int_strict(const std::string& s, const std::string& what);

}  // namespace nslab
