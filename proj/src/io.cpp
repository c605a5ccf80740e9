#include "lvc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lvc::io {

namespace {

std::ofstream open_out(const std::string& dir, const std::string& name) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

double parse_field(const std::string& text, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::runtime_error(where + ": bad numeric field '" + text + "'");
    return value;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string percent_fixed(double value, int decimals) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

nlohmann::json params_json(const RunConfig& config) {
    const ModelParams& p = config.params;
    nlohmann::json alpha = nlohmann::json::array();
    for (int k = 0; k < p.species_count; ++k) {
        nlohmann::json row = nlohmann::json::array();
        for (int l = 0; l < p.species_count; ++l) row.push_back(p.alpha(k, l));
        alpha.push_back(row);
    }
    return {
        {"species", p.species_count},
        {"r", p.growth},
        {"alpha", alpha},
        {"eps", p.diffusion},
        {"d", config.base_diffusion},
    };
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

void write_run_outputs(const SimulationResult& result, const RunConfig& config, const Grid& grid,
                       const std::string& dir) {
    const int m = config.params.species_count;

    {
        auto out = open_out(dir, "averages.csv");
        out << "# lvc averages v1\n";
        out << "step,t";
        for (int k = 0; k < m; ++k) out << ",avg_" << k + 1;
        out << "\n";
        for (std::size_t n = 0; n < result.average_trajectory.size(); ++n) {
            out << n << ',' << format_double(static_cast<double>(n) * config.run.tau);
            for (int k = 0; k < m; ++k) out << ',' << format_double(result.average_trajectory[n][k]);
            out << "\n";
        }
    }

    {
        auto out = open_out(dir, "final_field.csv");
        out << "# lvc final-field v1\n";
        out << (grid.dim == 1 ? "cell,x" : "cell,x,y");
        for (int k = 0; k < m; ++k) out << ",u_" << k + 1;
        out << "\n";
        const std::size_t n_cells = grid.cell_count();
        const int nx = grid.cells_per_axis;
        for (std::size_t i = 0; i < n_cells; ++i) {
            const int ix = static_cast<int>(i) % nx;
            const int iy = static_cast<int>(i) / nx;
            out << i << ',' << format_double(grid.cell_center(ix));
            if (grid.dim == 2) out << ',' << format_double(grid.cell_center(iy));
            for (int k = 0; k < m; ++k) out << ',' << format_double(result.final_state.u[k][i]);
            out << "\n";
        }
    }

    {
        nlohmann::json summary = {
            {"format", "lvc-run-summary-v1"},
            {"survival_code", result.survival_code},
            {"steps_to_equilibrium", result.steps_to_equilibrium},
            {"converged", result.converged},
            {"solver_failed", result.solver_failed},
            {"config",
             {
                 {"scenario", config.scenario.name},
                 {"grid", config.scenario.cells_per_axis},
                 {"length", config.scenario.length},
                 {"preset", config.preset_name},
                 {"diffusion_scale", config.scale == DiffusionScale::Small ? "small" : "regular"},
                 {"tau", config.run.tau},
                 {"eps_stop", config.run.eps_stop},
                 {"theta", config.run.theta},
                 {"max_steps", config.run.max_steps},
                 {"u0", config.u0},
                 {"params", params_json(config)},
             }},
        };
        if (!result.error.empty()) summary["error"] = result.error;
        auto out = open_out(dir, "summary.json");
        out << summary.dump(2) << "\n";
    }

    if (grid.dim == 2) {
        for (int k = 0; k < m; ++k) {
            write_svg_heatmap(dir + "/final_field_s" + std::to_string(k + 1) + ".svg",
                              grid.cells_per_axis, grid.cells_per_axis, result.final_state.u[k]);
        }
    }
}

void write_sweep_outputs(const std::vector<SweepRecord>& records, const SurvivalSummary& summary,
                         const SweepSpec& spec, const std::string& dir) {
    if (records.empty()) throw std::invalid_argument("no records to write");
    const int m = spec.species_count();

    {
        auto out = open_out(dir, "records.csv");
        out << "# lvc records v1\n";
        out << "run,converged,steps,survival";
        for (const auto& [name, value] : records.front().parameters) out << ',' << name;
        for (int k = 0; k < m; ++k) out << ",final_" << k + 1;
        out << "\n";
        for (const auto& rec : records) {
            out << rec.run_index << ',' << (rec.converged ? 1 : 0) << ',' << rec.steps_to_equilibrium
                << ',' << rec.survival_code;
            for (const auto& [name, value] : rec.parameters) out << ',' << format_double(value);
            for (int k = 0; k < m; ++k) out << ',' << format_double(rec.final_averages[k]);
            out << "\n";
        }
    }

    {
        auto out = open_out(dir, "survival_summary.csv");
        out << "# lvc survival-summary v1; runs=" << summary.total_runs
            << " converged=" << summary.converged_runs
            << " nonconverged=" << summary.nonconverged_runs << "\n";
        out << "code,count,percent\n";
        for (std::size_t c = 0; c < summary.codes.size(); ++c)
            out << summary.codes[c] << ',' << summary.counts[c] << ','
                << percent_fixed(summary.percent[c], 2) << "\n";
    }

    {
        const StepsMap map = steps_map(records, spec);
        auto out = open_out(dir, "steps_map.csv");
        out << "# lvc steps-map v1\n";
        for (std::size_t c = 0; c < map.columns.size(); ++c)
            out << (c ? "," : "") << map.columns[c];
        out << "\n";
        for (const auto& row : map.rows) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) out << ',';
                if (c + 1 == row.size())
                    out << static_cast<long>(row[c]);
                else
                    out << format_double(row[c]);
            }
            out << "\n";
        }
    }
}

void write_factor_outputs(const FactorReport& report, const std::vector<LabeledFactor>& labels,
                          const FeatureMatrix& features, const std::string& dir) {
    const int p = report.feature_count;
    const int f = report.factor_count;

    {
        auto out = open_out(dir, "correlation.csv");
        out << "# lvc correlation v1\n";
        out << "feature";
        for (const auto& name : features.names) out << ',' << name;
        out << "\n";
        for (int i = 0; i < p; ++i) {
            out << features.names[i];
            for (int j = 0; j < p; ++j)
                out << ',' << format_double(report.correlation[static_cast<std::size_t>(i) * p + j]);
            out << "\n";
        }
    }

    {
        auto out = open_out(dir, "loadings.csv");
        out << "# lvc loadings v1\n";
        out << "feature";
        for (int j = 0; j < f; ++j) out << ",factor_" << j + 1;
        out << "\n";
        for (int i = 0; i < p; ++i) {
            out << features.names[i];
            for (int j = 0; j < f; ++j)
                out << ',' << format_double(report.loadings[static_cast<std::size_t>(i) * f + j]);
            out << "\n";
        }
    }

    {
        auto out = open_out(dir, "factors.txt");
        out << "Cumulative variance: " << percent_fixed(100.0 * report.cumulative_variance, 2)
            << "%\n";
        for (const auto& lf : labels) {
            out << "Factor " << lf.factor << ": " << lf.label << " (var "
                << percent_fixed(100.0 * lf.variance_fraction, 1) << "%)";
            if (lf.tied) out << " [tie]";
            out << "\n";
        }
    }
}

RecordsFile read_records_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open records file: " + path);

    std::string line;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        header = split_csv(line);
        break;
    }
    if (header.size() < 5 || header[0] != "run" || header[1] != "converged" || header[2] != "steps" ||
        header[3] != "survival")
        throw std::runtime_error(path + ": not a records.csv (unexpected header)");

    int final_count = 0;
    for (const auto& name : header)
        if (name.rfind("final_", 0) == 0) ++final_count;
    if (final_count == 0) throw std::runtime_error(path + ": no final_k columns");
    const std::size_t param_first = 4;
    const std::size_t param_last = header.size() - final_count;  // one past

    RecordsFile file;
    file.species_count = final_count;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != header.size())
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": wrong field count");
        const std::string where = path + ":" + std::to_string(line_no);
        SweepRecord rec;
        rec.run_index = static_cast<int>(parse_field(fields[0], where));
        rec.converged = parse_field(fields[1], where) != 0.0;
        rec.steps_to_equilibrium = static_cast<long>(parse_field(fields[2], where));
        rec.survival_code = fields[3];
        for (std::size_t c = param_first; c < param_last; ++c)
            rec.parameters.emplace_back(header[c], parse_field(fields[c], where));
        for (std::size_t c = param_last; c < fields.size(); ++c)
            rec.final_averages.push_back(parse_field(fields[c], where));
        for (int k = 0; k < file.species_count; ++k) {
            const std::string name = "u0_" + std::to_string(k + 1);
            for (const auto& [key, value] : rec.parameters)
                if (key == name) rec.initial_averages.push_back(value);
        }
        file.records.push_back(std::move(rec));
    }
    return file;
}

void write_svg_heatmap(const std::string& path, int nx, int ny, const std::vector<double>& values) {
    if (static_cast<std::size_t>(nx) * ny != values.size())
        throw std::invalid_argument("heatmap dimensions do not match value count");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);

    const int cell = 12;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << nx * cell << "\" height=\""
        << ny * cell << "\">\n";
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const double v = std::clamp(values[static_cast<std::size_t>(iy) * nx + ix], 0.0, 1.0);
            const int gray = static_cast<int>(std::lround(255.0 * v));
            // SVG y grows downward; flip so the domain's y grows upward
            out << "<rect x=\"" << ix * cell << "\" y=\"" << (ny - 1 - iy) * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << gray << ',' << gray << ','
                << gray << ")\"/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace lvc::io
