#include "hnls/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "hnls/presets.hpp"
#include "hnls/quadrature.hpp"

namespace hnls {

std::string to_string(Equation equation) {
    switch (equation) {
        case Equation::cubic_nls: return "cubic_nls";
        case Equation::dnlse: return "dnlse";
    }
    return "?";
}

std::string to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::lie: return "lie";
        case Scheme::strang: return "strang";
        case Scheme::rtransform_strang: return "rtransform_strang";
        case Scheme::cn: return "cn";
        case Scheme::rk4: return "rk4";
    }
    return "?";
}

long long RunConfig::steps() const { return std::llround(final_time / tau); }

std::string RunConfig::canonical() const {
    char buffer[256];
    std::snprintf(buffer, sizeof(buffer),
                  "equation=%s;scheme=%s;M=%d;tau=%.17g;T=%.17g;mu=%.17g;delta=%.17g;"
                  "initial=%s",
                  to_string(equation).c_str(), to_string(scheme).c_str(), modes, tau,
                  final_time, mu, delta, initial.c_str());
    return buffer;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct Entry {
    std::string value;
    int line;
};

double parse_number(const std::string& key, const Entry& entry) {
    try {
        size_t used = 0;
        const double value = std::stod(entry.value, &used);
        if (used != entry.value.size()) throw std::invalid_argument("trailing");
        if (!std::isfinite(value)) {
            throw ConfigError("line " + std::to_string(entry.line) + ": " + key +
                              " must be finite, got '" + entry.value + "'");
        }
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(entry.line) + ": " + key +
                          " is not a number: '" + entry.value + "'");
    }
}

int parse_int(const std::string& key, const Entry& entry) {
    const double value = parse_number(key, entry);
    const long long rounded = std::llround(value);
    if (value != double(rounded)) {
        throw ConfigError("line " + std::to_string(entry.line) + ": " + key +
                          " must be an integer, got '" + entry.value + "'");
    }
    return static_cast<int>(rounded);
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    static const std::vector<std::string> known = {
        "equation", "scheme", "M", "tau", "T", "mu", "delta", "initial",
        "record_interval", "records_out", "snapshot_out", "coeffs_out"};

    std::map<std::string, Entry> entries;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key=value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (entries.count(key)) {
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
        entries[key] = Entry{value, lineno};
    }

    std::string missing;
    for (const char* required : {"equation", "scheme", "M", "tau", "T"}) {
        if (!entries.count(required)) {
            if (!missing.empty()) missing += ", ";
            missing += required;
        }
    }
    if (!missing.empty()) {
        throw ConfigError("missing required keys: " + missing);
    }

    RunConfig cfg;

    {
        const Entry& e = entries.at("equation");
        if (e.value == "cubic_nls") cfg.equation = Equation::cubic_nls;
        else if (e.value == "dnlse") cfg.equation = Equation::dnlse;
        else throw ConfigError("line " + std::to_string(e.line) +
                               ": equation must be cubic_nls or dnlse, got '" + e.value + "'");
    }
    {
        const Entry& e = entries.at("scheme");
        if (e.value == "lie") cfg.scheme = Scheme::lie;
        else if (e.value == "strang") cfg.scheme = Scheme::strang;
        else if (e.value == "rtransform_strang") cfg.scheme = Scheme::rtransform_strang;
        else if (e.value == "cn") cfg.scheme = Scheme::cn;
        else if (e.value == "rk4") cfg.scheme = Scheme::rk4;
        else throw ConfigError("line " + std::to_string(e.line) + ": unknown scheme '" +
                               e.value + "'");
    }

    cfg.modes = parse_int("M", entries.at("M"));
    if (cfg.modes < 1 || cfg.modes > kMaxDegree) {
        throw ConfigError("line " + std::to_string(entries.at("M").line) +
                          ": M must be in [1, " + std::to_string(kMaxDegree) + "]");
    }
    cfg.tau = parse_number("tau", entries.at("tau"));
    if (cfg.tau <= 0.0) {
        throw ConfigError("line " + std::to_string(entries.at("tau").line) +
                          ": tau must be positive");
    }
    cfg.final_time = parse_number("T", entries.at("T"));
    if (cfg.final_time < 0.0) {
        throw ConfigError("line " + std::to_string(entries.at("T").line) +
                          ": T must be non-negative");
    }
    if (entries.count("mu")) cfg.mu = parse_number("mu", entries.at("mu"));
    if (entries.count("delta")) cfg.delta = parse_number("delta", entries.at("delta"));
    if (entries.count("initial")) {
        cfg.initial = entries.at("initial").value;
        const auto& names = preset_names();
        if (std::find(names.begin(), names.end(), cfg.initial) == names.end()) {
            std::string known_names;
            for (const auto& name : names) {
                if (!known_names.empty()) known_names += ", ";
                known_names += name;
            }
            throw ConfigError("line " + std::to_string(entries.at("initial").line) +
                              ": unknown initial preset '" + cfg.initial + "' (known: " +
                              known_names + ")");
        }
    }
    if (entries.count("record_interval")) {
        cfg.record_interval = parse_int("record_interval", entries.at("record_interval"));
        if (cfg.record_interval < 1) {
            throw ConfigError("line " + std::to_string(entries.at("record_interval").line) +
                              ": record_interval must be positive");
        }
    }
    if (entries.count("records_out")) cfg.records_out = entries.at("records_out").value;
    if (entries.count("snapshot_out")) cfg.snapshot_out = entries.at("snapshot_out").value;
    if (entries.count("coeffs_out")) cfg.coeffs_out = entries.at("coeffs_out").value;

    const bool cubic = cfg.equation == Equation::cubic_nls;
    const bool scheme_ok = cubic
        ? (cfg.scheme == Scheme::lie || cfg.scheme == Scheme::strang)
        : (cfg.scheme == Scheme::rtransform_strang || cfg.scheme == Scheme::cn ||
           cfg.scheme == Scheme::rk4);
    if (!scheme_ok) {
        throw ConfigError("scheme " + to_string(cfg.scheme) + " is not valid for equation " +
                          to_string(cfg.equation));
    }

    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace hnls
