#pragma once

#include <string>
#include <vector>

#include "lvc/model.hpp"

namespace lvc {

/// Diffusion regime: eps = D, or eps = D/10 ("small diffusion").
enum class DiffusionScale { Regular, Small };

inline double apply_scale(double d, DiffusionScale s) {
    return s == DiffusionScale::Regular ? d : d / 10.0;
}

/// One of the shipped parameter cases (survival scenarios). base_diffusion
/// holds D; the model's eps is D or D/10 depending on the diffusion scale.
struct CasePreset {
    std::string name;
    std::string description;
    std::vector<double> growth;          ///< r
    std::vector<double> competition;     ///< alpha, row-major, zero diagonal
    std::vector<double> base_diffusion;  ///< D
};

const std::vector<CasePreset>& case_presets();

/// nullptr when the name is unknown.
const CasePreset* find_preset(const std::string& name);

ModelParams preset_params(const CasePreset& preset, DiffusionScale scale);

}  // namespace lvc
