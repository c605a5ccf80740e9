#include "lvc/presets.hpp"

namespace lvc {

const std::vector<CasePreset>& case_presets() {
    static const std::vector<CasePreset> presets = {
        {"case-2sp-1",
         "two species, one survives",
         {0.074, 0.084},
         {0.0, 0.074,
          0.013, 0.0},
         {0.035, 0.014}},
        {"case-2sp-2",
         "two species, both survive",
         {0.083, 0.081},
         {0.0, 0.053,
          0.049, 0.0},
         {0.016, 0.014}},
        {"case-3sp-1",
         "three species, one survives",
         {0.050, 0.087, 0.041},
         {0.0, 0.048, 0.067,
          0.051, 0.0, 0.094,
          0.028, 0.041, 0.0},
         {0.078, 0.087, 0.012}},
        {"case-3sp-2",
         "three species, two survive",
         {0.086, 0.091, 0.066},
         {0.0, 0.031, 0.045,
          0.051, 0.0, 0.019,
          0.058, 0.085, 0.0},
         {0.022, 0.021, 0.063}},
        {"case-3sp-3",
         "three species, all survive",
         {0.098, 0.095, 0.078},
         {0.0, 0.055, 0.057,
          0.095, 0.0, 0.031,
          0.070, 0.022, 0.0},
         {0.031, 0.027, 0.026}},
    };
    return presets;
}

const CasePreset* find_preset(const std::string& name) {
    for (const auto& p : case_presets())
        if (p.name == name) return &p;
    return nullptr;
}

ModelParams preset_params(const CasePreset& preset, DiffusionScale scale) {
    std::vector<double> eps;
    eps.reserve(preset.base_diffusion.size());
    for (double d : preset.base_diffusion) eps.push_back(apply_scale(d, scale));
    return make_params(preset.growth, preset.competition, eps);
}

}  // namespace lvc
