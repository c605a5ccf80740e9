#include "lvc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lvc {

namespace {

void check_dimension(const ModelParams& params, const std::vector<double>& u) {
    if (static_cast<int>(u.size()) != params.species_count) {
        throw std::invalid_argument("species vector has length " + std::to_string(u.size()) +
                                    ", model has M=" + std::to_string(params.species_count));
    }
}

}  // namespace

ModelParams make_params(std::vector<double> growth,
                        std::vector<double> competition,
                        std::vector<double> diffusion) {
    const int m = static_cast<int>(growth.size());
    if (m < 1) throw std::invalid_argument("model needs at least one species");
    if (static_cast<int>(diffusion.size()) != m)
        throw std::invalid_argument("diffusion vector length does not match species count");
    if (static_cast<int>(competition.size()) != m * m)
        throw std::invalid_argument("competition matrix is not M x M");
    for (int k = 0; k < m; ++k) {
        if (!(growth[k] > 0.0) || !std::isfinite(growth[k]))
            throw std::invalid_argument("growth rate r_" + std::to_string(k + 1) + " must be positive");
        if (!(diffusion[k] > 0.0) || !std::isfinite(diffusion[k]))
            throw std::invalid_argument("diffusion eps_" + std::to_string(k + 1) + " must be positive");
    }
    for (int k = 0; k < m; ++k) {
        for (int l = 0; l < m; ++l) {
            const double a = competition[static_cast<std::size_t>(k) * m + l];
            if (k == l) {
                if (a != 0.0)
                    throw std::invalid_argument("competition diagonal must be zero (self limitation is logistic)");
            } else if (!(a >= 0.0) || !std::isfinite(a)) {
                throw std::invalid_argument("competition alpha_" + std::to_string(k + 1) +
                                            std::to_string(l + 1) + " must be >= 0");
            }
        }
    }
    ModelParams p;
    p.species_count = m;
    p.growth = std::move(growth);
    p.competition = std::move(competition);
    p.diffusion = std::move(diffusion);
    return p;
}

std::vector<double> reaction(const ModelParams& params, const std::vector<double>& u) {
    check_dimension(params, u);
    const int m = params.species_count;
    std::vector<double> f(m);
    for (int k = 0; k < m; ++k) {
        double suppression = 0.0;
        for (int l = 0; l < m; ++l) {
            if (l != k) suppression += params.alpha(k, l) * u[l];
        }
        f[k] = params.growth[k] * u[k] * (1.0 - u[k]) - u[k] * suppression;
    }
    return f;
}

std::vector<double> reaction_jacobian(const ModelParams& params, const std::vector<double>& u) {
    check_dimension(params, u);
    const int m = params.species_count;
    std::vector<double> jac(static_cast<std::size_t>(m) * m);
    for (int k = 0; k < m; ++k) {
        double suppression = 0.0;
        for (int l = 0; l < m; ++l) {
            if (l != k) suppression += params.alpha(k, l) * u[l];
        }
        for (int l = 0; l < m; ++l) {
            jac[static_cast<std::size_t>(k) * m + l] =
                (l == k) ? params.growth[k] * (1.0 - 2.0 * u[k]) - suppression
                         : -params.alpha(k, l) * u[k];
        }
    }
    return jac;
}

}  // namespace lvc
