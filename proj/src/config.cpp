#include "lvc/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>

namespace lvc {

namespace {

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw std::invalid_argument("config key '" + key + "': " + why);
}

double parse_double(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) bad_key(key, "not a number: '" + text + "'");
    return value;
}

long parse_long(const std::string& key, const std::string& text) {
    long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) bad_key(key, "not an integer: '" + text + "'");
    return value;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                               : comma - start);
        out.push_back(parse_double(key, item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys = {
        "scenario", "preset",   "r",       "d",        "alpha",          "u0",
        "grid",     "length",   "tau",     "eps_stop", "theta",          "max_steps",
        "seed",     "runs",     "mode",    "species",  "diffusion_scale", "factors",
        "out",
    };
    return keys;
}

}  // namespace

KeyValues read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    KeyValues kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                        ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (kv.count(key))
            throw std::invalid_argument(path + ":" + std::to_string(line_no) + ": duplicate key '" +
                                        key + "'");
        kv[key] = value;
    }
    return kv;
}

ParsedConfig parse_config(const KeyValues& kv) {
    for (const auto& [key, value] : kv)
        if (!known_keys().count(key)) bad_key(key, "unknown key");

    auto get = [&kv](const std::string& key) -> const std::string* {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    const std::string* scenario_text = get("scenario");
    if (!scenario_text)
        throw std::invalid_argument("missing required key: scenario (1d, 2da or 2db)");
    Scenario scenario = Scenario::by_name(*scenario_text);

    if (const std::string* v = get("grid")) {
        const long cells = parse_long("grid", *v);
        if (cells < 1) bad_key("grid", "cells per axis must be >= 1");
        scenario.cells_per_axis = static_cast<int>(cells);
    }
    if (const std::string* v = get("length")) {
        const double len = parse_double("length", *v);
        if (!(len > 0.0)) bad_key("length", "domain length must be positive");
        scenario.length = len;
    }

    DiffusionScale scale = DiffusionScale::Regular;
    if (const std::string* v = get("diffusion_scale")) {
        if (*v == "regular")
            scale = DiffusionScale::Regular;
        else if (*v == "small")
            scale = DiffusionScale::Small;
        else
            bad_key("diffusion_scale", "expected 'regular' or 'small'");
    }

    RunOptions run;
    if (const std::string* v = get("tau")) {
        run.tau = parse_double("tau", *v);
        if (!(run.tau > 0.0)) bad_key("tau", "time step must be positive");
    }
    if (const std::string* v = get("eps_stop")) {
        run.eps_stop = parse_double("eps_stop", *v);
        if (!(run.eps_stop > 0.0)) bad_key("eps_stop", "stopping tolerance must be positive");
    }
    if (const std::string* v = get("theta")) {
        run.theta = parse_double("theta", *v);
        if (!(run.theta > 0.0)) bad_key("theta", "survival threshold must be positive");
    }
    if (const std::string* v = get("max_steps")) {
        run.max_steps = parse_long("max_steps", *v);
        if (run.max_steps < 1) bad_key("max_steps", "must be >= 1");
    }

    // model parameters: preset, explicit r/d/alpha, or (full-random sweeps) species count
    const std::string* preset_name = get("preset");
    const bool has_explicit = get("r") || get("d") || get("alpha");
    if (preset_name && has_explicit)
        bad_key("preset", "give either a preset or explicit r/d/alpha, not both");

    std::string resolved_preset;
    std::vector<double> base_diffusion, growth, alpha;
    if (preset_name) {
        const CasePreset* preset = find_preset(*preset_name);
        if (!preset) bad_key("preset", "unknown preset '" + *preset_name + "'");
        resolved_preset = preset->name;
        growth = preset->growth;
        alpha = preset->competition;
        base_diffusion = preset->base_diffusion;
    } else if (has_explicit) {
        if (!get("r") || !get("d") || !get("alpha"))
            throw std::invalid_argument("explicit parameters need all of r, d and alpha");
        growth = parse_double_list("r", *get("r"));
        base_diffusion = parse_double_list("d", *get("d"));
        alpha = parse_double_list("alpha", *get("alpha"));
        const std::size_t m = growth.size();
        if (base_diffusion.size() != m) bad_key("d", "length does not match r");
        if (alpha.size() != m * m) bad_key("alpha", "expected a row-major MxM list");
    }

    const std::string* mode_text = get("mode");

    std::vector<double> u0;
    if (const std::string* v = get("u0")) {
        u0 = parse_double_list("u0", *v);
        for (double x : u0)
            if (!(x >= 0.0 && x <= 1.0)) bad_key("u0", "initial values must lie in [0,1]");
    }

    ParsedConfig parsed;
    if (const std::string* v = get("out")) parsed.out_dir = *v;
    if (const std::string* v = get("factors")) {
        const long f = parse_long("factors", *v);
        if (f < 0) bad_key("factors", "must be >= 0");
        parsed.factors = static_cast<int>(f);
    }

    if (!mode_text) {
        // single run
        for (const char* forbidden : {"runs", "seed", "species"})
            if (get(forbidden)) bad_key(forbidden, "only valid for sweeps (set 'mode')");
        if (growth.empty())
            throw std::invalid_argument("missing required key: preset (or explicit r/d/alpha)");

        RunConfig rc;
        rc.scenario = scenario;
        rc.preset_name = resolved_preset;
        rc.base_diffusion = base_diffusion;
        rc.scale = scale;
        std::vector<double> eps;
        for (double dcoef : base_diffusion) eps.push_back(apply_scale(dcoef, scale));
        rc.params = make_params(growth, alpha, eps);
        const int m = rc.params.species_count;
        if (u0.empty()) u0.assign(m, 0.5);
        if (u0.size() == 1 && m > 1) u0.assign(m, u0[0]);
        if (static_cast<int>(u0.size()) != m) bad_key("u0", "length does not match species count");
        rc.u0 = u0;
        rc.run = run;
        parsed.is_sweep = false;
        parsed.run = std::move(rc);
        return parsed;
    }

    // sweep
    SweepSpec spec;
    if (*mode_text == "random-diffusion")
        spec.mode = SweepMode::RandomDiffusion;
    else if (*mode_text == "random-ic")
        spec.mode = SweepMode::RandomIc;
    else if (*mode_text == "full-random")
        spec.mode = SweepMode::FullRandom;
    else
        bad_key("mode", "expected random-diffusion, random-ic or full-random");

    if (growth.empty()) {
        if (spec.mode != SweepMode::FullRandom)
            throw std::invalid_argument(
                "missing required key: preset (or r/d/alpha) for a held-parameter sweep");
        const std::string* species_text = get("species");
        if (!species_text)
            throw std::invalid_argument("missing required key: species (or a preset) for full-random");
        const long m = parse_long("species", *species_text);
        if (m < 1 || m > 8) bad_key("species", "species count must be in [1,8]");
        // placeholders; every entry is redrawn per run
        growth.assign(m, 0.05);
        base_diffusion.assign(m, 0.05);
        alpha.assign(m * m, 0.05);
        for (long k = 0; k < m; ++k) alpha[static_cast<std::size_t>(k) * m + k] = 0.0;
    } else if (get("species")) {
        bad_key("species", "species count comes from the preset/explicit parameters");
    }

    std::vector<double> eps;
    for (double dcoef : base_diffusion) eps.push_back(apply_scale(dcoef, scale));
    spec.base_params = make_params(growth, alpha, eps);
    const int m = spec.base_params.species_count;
    if (!u0.empty()) {
        if (u0.size() == 1 && m > 1) u0.assign(m, u0[0]);
        if (static_cast<int>(u0.size()) != m) bad_key("u0", "length does not match species count");
        spec.base_u0 = u0;
    }
    spec.diffusion_scale = scale;
    spec.scenario = scenario;
    spec.run = run;
    if (const std::string* v = get("runs")) {
        const long runs = parse_long("runs", *v);
        if (runs < 1) bad_key("runs", "must be >= 1");
        spec.run_count = static_cast<int>(runs);
    }
    if (const std::string* v = get("seed"))
        spec.seed = static_cast<std::uint64_t>(parse_long("seed", *v));

    parsed.is_sweep = true;
    parsed.sweep = std::move(spec);
    return parsed;
}

}  // namespace lvc
