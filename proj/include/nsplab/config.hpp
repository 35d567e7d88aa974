#pragma once

#include <map>
#include <string>
#include <vector>

namespace nsplab::config {

// Flat `key = value` run configuration. Every key has a default; unknown
// keys are a hard error. Merge order: defaults < file < flags.
struct RunConfig {
    double v_minus = 1.0, u_minus = 0.0;
    double v_plus = 1.2, u_plus = 0.011697;
    double L_dom = 150.0;
    double dxi = 0.05;
    double t_final = 10.0;
    double report_interval = 1.0;
    double A_v = 0.0, A_u = 0.0;
    double xi0_v = 0.0, xi0_u = 0.0;
    double w_v = 2.0, w_u = 2.0;
    double c0 = 1.0;
    double cfl_h = 0.4, cfl_p = 0.25;
    std::vector<double> snapshots; // times, comma-separated in the file
    unsigned seed = 12345;
    std::string output_dir = ".";
    std::string verify_profile = "quick";
};

// Throws std::invalid_argument naming the key on unknown keys, unparsable
// values, or violated preconditions (positivity, v_plus vs v_minus ordering).
RunConfig parse_file(const std::string& path);
RunConfig parse_text(const std::string& text);

// Apply `key=value` overrides (CLI flags) on top of a parsed config.
void apply_overrides(RunConfig& cfg,
                     const std::map<std::string, std::string>& overrides);

// Resolved config as the canonical key = value listing (17 significant
// digits), echoed verbatim into output metadata.
std::string echo(const RunConfig& cfg);

void validate(const RunConfig& cfg);

} // namespace nsplab::config
