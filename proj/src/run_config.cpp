#include "nslab/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nslab/errors.hpp"
#include "nslab/grid.hpp"
#include "nslab/inequality_lab.hpp"
#include "nslab/mixed_norm.hpp"
#include "nslab/solver.hpp"
#include "nslab/test_functions.hpp"

namespace nslab {

namespace {

// shortest decimal that parses back to the identical double
std::string fmt_g17(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

using Normalizer = std::function<std::string(const std::string&)>;

std::string norm_double(const std::string& s, const char* key) {
    return fmt_g17(parse_double_strict(s, key));
}

std::string norm_int(const std::string& s, const char* key, long long lo, long long hi) {
    const long long v = parse_int_strict(s, key);
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(key) + " out of range: " + s);
    return std::to_string(v);
}

std::string norm_exponent(const std::string& s) {
    const double v = parse_exponent(s);
    return std::isinf(v) ? "inf" : fmt_g17(v);
}

std::string norm_on_off(const std::string& s, const char* key) {
    if (s == "on" || s == "true" || s == "1") return "on";
    if (s == "off" || s == "false" || s == "0") return "off";
    throw std::invalid_argument(std::string(key) + " must be on or off, got " + s);
}

std::string norm_grid_list(const std::string& s, const char* key) {
    std::string out;
    std::stringstream ss(s);
    std::string item;
    int count = 0;
    while (std::getline(ss, item, ',')) {
        const long long n = parse_int_strict(item, key);
        (void)Grid3(static_cast<int>(n));  // validates even >= 4
        if (count++) out += ",";
        out += std::to_string(n);
    }
    if (count == 0) throw std::invalid_argument(std::string(key) + " must list grid sizes");
    return out;
}

struct OptionDef {
    const char* key;
    const char* default_value;
    Normalizer normalize;
};

const std::vector<OptionDef>& option_defs(const std::string& subcommand) {
    auto dbl = [](const char* k) {
        return [k](const std::string& s) { return norm_double(s, k); };
    };
    auto intr = [](const char* k, long long lo, long long hi) {
        return [k, lo, hi](const std::string& s) { return norm_int(s, k, lo, hi); };
    };
    auto expo = []() {
        return [](const std::string& s) { return norm_exponent(s); };
    };
    auto str = []() { return [](const std::string& s) { return s; }; };

    static const std::vector<OptionDef> simulate = {
        {"grid", "32", intr("grid", 4, 1 << 20)},
        {"dt", "0.001", dbl("dt")},
        {"t_end", "1", dbl("t_end")},
        {"nu", "1", dbl("nu")},
        {"init", "taylor-green",
         [](const std::string& s) { return to_string(init_kind_from_string(s)); }},
        {"seed", "0", intr("seed", 0, std::numeric_limits<long long>::max())},
        {"amplitude", "1", dbl("amplitude")},
        {"slope", "-2", dbl("slope")},
        {"dealias", "on", [](const std::string& s) { return norm_on_off(s, "dealias"); }},
        {"p", "inf", expo()},
        {"q", "inf", expo()},
        {"r", "inf", expo()},
        {"stride", "1", intr("stride", 1, 1 << 30)},
        {"field_file", "", str()},
        {"save_fields", "", str()},
        {"out", "run.csv", str()},
    };
    static const std::vector<OptionDef> verify = {
        {"suite", "lemma1",
         [](const std::string& s) {
             if (s != "lemma1" && s != "lemma2")
                 throw std::invalid_argument("suite must be lemma1 or lemma2, got " + s);
             return s;
         }},
        {"p", "4", expo()},
        {"q", "4", expo()},
        {"r", "4", expo()},
        {"theta", "2", dbl("theta")},
        {"lambda", "2", dbl("lambda")},
        {"kappa", "3", dbl("kappa")},
        {"samples", "100", intr("samples", 1, 1 << 30)},
        {"grid", "32", [](const std::string& s) { return norm_grid_list(s, "grid"); }},
        {"seed", "0", intr("seed", 0, std::numeric_limits<long long>::max())},
        {"family", "random-bump",
         [](const std::string& s) { return to_string(bump_kind_from_string(s)); }},
        {"radius", "2.8274333882308138", dbl("radius")},
        {"amplitude", "1", dbl("amplitude")},
        {"out", "report.csv", str()},
    };
    static const std::vector<OptionDef> norm = {
        {"input", "", str()},
        {"p", "2", expo()},
        {"q", "2", expo()},
        {"r", "2", expo()},
    };
    if (subcommand == "simulate") return simulate;
    if (subcommand == "verify") return verify;
    if (subcommand == "norm") return norm;
    throw std::invalid_argument("unknown subcommand: " + subcommand);
}

void cross_validate(RunManifest& m) {
    if (m.subcommand == "simulate") {
        SolverConfig cfg;
        cfg.grid_n = m.get_int("grid");
        cfg.dt = m.get_double("dt");
        cfg.t_end = m.get_double("t_end");
        cfg.nu = m.get_double("nu");
        cfg.init = init_kind_from_string(m.get("init"));
        cfg.stride = m.get_int("stride");
        cfg.field_file = m.get("field_file");
        cfg.validate();
        if (m.get_double("amplitude") == 0.0)
            throw std::invalid_argument("amplitude must be nonzero");
        // Theorem-range exponents; beta may be infinite (boundary tuple).
        (void)MixedExponents(parse_exponent(m.get("p")), parse_exponent(m.get("q")),
                             parse_exponent(m.get("r")));
        if (m.get("out").empty()) throw std::invalid_argument("out path must not be empty");
    } else if (m.subcommand == "verify") {
        if (m.get("suite") == "lemma1") {
            (void)beta_of(parse_exponent(m.get("p")), parse_exponent(m.get("q")),
                          parse_exponent(m.get("r")));
        } else {
            (void)Lemma2Exponents(m.get_double("theta"), m.get_double("lambda"),
                                  m.get_double("kappa"));
        }
        const double radius = m.get_double("radius");
        if (!(radius > 0.0) || !(radius < std::numbers::pi))
            throw std::invalid_argument("radius must lie in (0, pi)");
        if (m.get_double("amplitude") == 0.0)
            throw std::invalid_argument("amplitude must be nonzero");
        if (m.get("out").empty()) throw std::invalid_argument("out path must not be empty");
    } else if (m.subcommand == "norm") {
        if (m.get("input").empty())
            throw std::invalid_argument("norm requires --input <field file>");
    }
}

}  // namespace

bool RunManifest::has(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return true;
    return false;
}

const std::string& RunManifest::get(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return v;
    throw std::invalid_argument("manifest has no key '" + key + "'");
}

double RunManifest::get_double(const std::string& key) const {
    return parse_double_strict(get(key), key);
}

int RunManifest::get_int(const std::string& key) const {
    return static_cast<int>(parse_int_strict(get(key), key));
}

unsigned long long RunManifest::get_u64(const std::string& key) const {
    return static_cast<unsigned long long>(parse_int_strict(get(key), key));
}

bool RunManifest::get_on_off(const std::string& key) const { return get(key) == "on"; }

std::string RunManifest::serialize() const {
    std::string out = "subcommand=" + subcommand + "\n";
    out += std::string("version=") + kToolVersion + "\n";
    for (const auto& [k, v] : entries) out += k + "=" + v + "\n";
    return out;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open config file", path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        // strip comments and surrounding whitespace
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

const std::vector<std::pair<std::string, std::string>>& subcommand_defaults(
    const std::string& subcommand) {
    static std::map<std::string, std::vector<std::pair<std::string, std::string>>> cache;
    auto it = cache.find(subcommand);
    if (it == cache.end()) {
        std::vector<std::pair<std::string, std::string>> defs;
        for (const auto& d : option_defs(subcommand)) defs.emplace_back(d.key, d.default_value);
        it = cache.emplace(subcommand, std::move(defs)).first;
    }
    return it->second;
}

RunManifest resolve_manifest(const std::string& subcommand,
                             const std::map<std::string, std::string>& flag_values,
                             const std::string& config_path) {
    const auto& defs = option_defs(subcommand);
    std::map<std::string, std::string> merged;
    for (const auto& d : defs) merged[d.key] = d.default_value;

    if (!config_path.empty()) {
        for (const auto& [k, v] : parse_kv_file(config_path)) {
            if (k == "subcommand") {
                if (v != subcommand)
                    throw std::invalid_argument("config file is for subcommand '" + v +
                                                "', not '" + subcommand + "'");
                continue;
            }
            if (k == "version") continue;
            if (!merged.count(k))
                throw std::invalid_argument("unknown key '" + k + "' in " + config_path);
            merged[k] = v;
        }
    }
    for (const auto& [k, v] : flag_values) {
        if (!merged.count(k)) throw std::invalid_argument("unknown option key '" + k + "'");
        merged[k] = v;
    }

    RunManifest m;
    m.subcommand = subcommand;
    for (const auto& d : defs) {
        const std::string& raw = merged[d.key];
        m.entries.emplace_back(d.key, raw.empty() ? raw : d.normalize(raw));
    }
    cross_validate(m);
    return m;
}

double parse_exponent(const std::string& s) {
    std::string lower;
    for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "inf" || lower == "infinity")
        return std::numeric_limits<double>::infinity();
    const double v = parse_double_strict(s, "exponent");
    if (!(v > 0.0)) throw std::invalid_argument("exponent must be positive or inf, got " + s);
    return v;
}

double parse_double_strict(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        if (std::isnan(v)) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(what + ": expected a real number, got '" + s + "'");
    }
}

long long parse_int_strict(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
    }
}

}  // namespace nslab
