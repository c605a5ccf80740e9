#pragma once

#include <map>
#include <string>
#include <vector>

#include "lvc/presets.hpp"
#include "lvc/simulate.hpp"
#include "lvc/sweep.hpp"

namespace lvc {

/// Fully resolved single-run configuration.
struct RunConfig {
    Scenario scenario;
    std::string preset_name;             ///< empty when r/d/alpha were given explicitly
    std::vector<double> base_diffusion;  ///< D, before the diffusion-scale factor
    ModelParams params;                  ///< eps already scaled
    DiffusionScale scale = DiffusionScale::Regular;
    std::vector<double> u0;              ///< one value per species
    RunOptions run;
};

/// A parsed configuration is either a single run or a sweep.
struct ParsedConfig {
    bool is_sweep = false;
    RunConfig run;
    SweepSpec sweep;
    std::string out_dir = "out";
    int factors = 0;  ///< retained factor count for post-sweep analysis; 0 = off
};

using KeyValues = std::map<std::string, std::string>;

/// Reads a flat key=value file (UTF-8, '#' comments, blank lines ignored).
KeyValues read_config_file(const std::string& path);

/// Validates and resolves a key=value configuration. The presence of `mode`
/// selects a sweep; otherwise a single run. Unknown keys, malformed or
/// out-of-range values, and missing required keys all throw with the
/// offending key named.
ParsedConfig parse_config(const KeyValues& kv);

}  // namespace lvc
