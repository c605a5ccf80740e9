#pragma once

#include <cstddef>
#include <vector>

namespace lvc {

/// Parameters of the M-species competition model
///
///   du_k/dt - div(eps_k grad u_k) = r_k u_k (1 - u_k) - sum_{l!=k} a_kl u_k u_l
///
/// Populations are fractions of a common carrying capacity, so all fields
/// live in [0,1]. The competition matrix carries a zero diagonal; self
/// limitation is entirely in the logistic term.
struct ModelParams {
    int species_count = 0;
    std::vector<double> growth;       ///< r_k, length M, strictly positive
    std::vector<double> competition;  ///< a_kl, row-major M x M, zero diagonal
    std::vector<double> diffusion;    ///< eps_k, length M, strictly positive

    double alpha(int k, int l) const { return competition[static_cast<std::size_t>(k) * species_count + l]; }
    double& alpha(int k, int l) { return competition[static_cast<std::size_t>(k) * species_count + l]; }
};

/// Builds a ModelParams and validates the invariants (positive r and eps,
/// nonnegative off-diagonal alpha, zero diagonal, consistent sizes).
/// Throws std::invalid_argument on violation.
ModelParams make_params(std::vector<double> growth,
                        std::vector<double> competition,
                        std::vector<double> diffusion);

/// Pointwise reaction term f_k = r_k u_k (1 - u_k) - sum_{l != k} a_kl u_k u_l.
/// `u` must have length M. Inputs are not mutated.
std::vector<double> reaction(const ModelParams& params, const std::vector<double>& u);

/// Jacobian J_kl = d f_k / d u_l of the reaction term, row-major M x M.
/// J_kk = r_k (1 - 2 u_k) - sum_{l != k} a_kl u_l,  J_kl = -a_kl u_k for l != k.
std::vector<double> reaction_jacobian(const ModelParams& params, const std::vector<double>& u);

}  // namespace lvc
