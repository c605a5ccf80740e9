#pragma once

#include <string>
#include <vector>

#include "lvc/config.hpp"
#include "lvc/simulate.hpp"
#include "lvc/stats.hpp"
#include "lvc/sweep.hpp"

namespace lvc::io {

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double value);

/// Writes averages.csv, final_field.csv and summary.json (plus one grayscale
/// final_field_s<k>.svg per species on 2D grids) into `dir`.
void write_run_outputs(const SimulationResult& result, const RunConfig& config, const Grid& grid,
                       const std::string& dir);

/// Writes records.csv, survival_summary.csv and steps_map.csv into `dir`.
void write_sweep_outputs(const std::vector<SweepRecord>& records, const SurvivalSummary& summary,
                         const SweepSpec& spec, const std::string& dir);

/// Writes correlation.csv, loadings.csv and factors.txt into `dir`.
void write_factor_outputs(const FactorReport& report, const std::vector<LabeledFactor>& labels,
                          const FeatureMatrix& features, const std::string& dir);

/// Reads a records.csv produced by write_sweep_outputs.
struct RecordsFile {
    int species_count = 0;
    std::vector<SweepRecord> records;
};
RecordsFile read_records_csv(const std::string& path);

/// 2D field as an SVG heatmap, values clamped to [0,1], white = 1.
void write_svg_heatmap(const std::string& path, int nx, int ny, const std::vector<double>& values);

}  // namespace lvc::io
