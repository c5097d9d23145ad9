#pragma once

#include <stdexcept>
#include <string>

namespace hnls {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class Equation { cubic_nls, dnlse };
enum class Scheme { lie, strang, rtransform_strang, cn, rk4 };

std::string to_string(Equation equation);
std::string to_string(Scheme scheme);

/// One experiment. Parsed from flat key=value text; `#` starts a comment.
/// Required keys: equation, scheme, M, tau, T.
struct RunConfig {
    Equation equation = Equation::dnlse;
    Scheme scheme = Scheme::rtransform_strang;
    int modes = 0;                  // key "M"
    double tau = 0.0;               // key "tau"
    double final_time = 0.0;        // key "T"
    double mu = 1.0;
    double delta = 1.0;
    std::string initial = "paper_dnlse";
    int record_interval = 10;       // steps between records
    std::string records_out;        // per-record CSV, empty = skip
    std::string snapshot_out;       // final nodal CSV (x,re,im)
    std::string coeffs_out;         // final coefficient CSV (m,re,im)

    /// Rounded step count; final_time is matched to steps()*tau.
    long long steps() const;

    /// Stable serialization of the semantic fields, used for cache keys.
    std::string canonical() const;
};

/// Parse and validate a configuration document. Error messages carry the
/// offending key and line number.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

}  // namespace hnls
