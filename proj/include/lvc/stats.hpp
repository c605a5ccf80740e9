#pragma once

#include <string>
#include <vector>

#include "lvc/sweep.hpp"

namespace lvc {

/// Standardizable feature table built from converged sweep records.
/// Two-species columns: eps_1, eps_2, alpha_12/r_1, alpha_21/r_2, u0_1,
/// u0_2, final_1, final_2; three species analogously (15 columns).
struct FeatureMatrix {
    std::vector<std::string> names;   ///< column names
    std::vector<std::string> groups;  ///< label group per column ("Diffusion 1", ...)
    std::vector<std::vector<double>> columns;  ///< column-major values
    std::size_t row_count = 0;

    int feature_count() const { return static_cast<int>(columns.size()); }
};

FeatureMatrix build_features(const std::vector<SweepRecord>& records, int species_count);

/// Pearson correlation matrix, row-major P x P, exactly symmetric with unit
/// diagonal. Throws (naming the column) when a column has zero variance.
std::vector<double> correlation_matrix(const FeatureMatrix& features);

/// Eigen-decomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenpairs are returned in descending eigenvalue order; eigenvectors are
/// the columns of `eigenvectors` (row-major n x n).
void symmetric_eigen(const std::vector<double>& matrix, int n, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors);

/// Varimax rotation (Kaiser row normalization) of a p x f loading matrix
/// (row-major). Orthogonal, so per-row communalities are preserved.
std::vector<double> varimax(const std::vector<double>& loadings, int p, int f);

struct FactorReport {
    int feature_count = 0;
    int factor_count = 0;
    std::vector<double> correlation;         ///< P x P
    std::vector<double> loadings;            ///< P x F, row-major, rotated
    std::vector<double> explained_variance;  ///< per retained factor, fraction of P
    double cumulative_variance = 0.0;        ///< sum of retained eigenvalues / P
};

/// Principal-component extraction from the correlation matrix: top-F
/// eigenpairs scaled to loadings, varimax-rotated, factors ordered by
/// descending rotated variance. Loading columns are sign-flipped so the
/// largest-magnitude entry is positive.
FactorReport extract_factors(const std::vector<double>& correlation, int feature_count,
                             int retain_count);

struct LabeledFactor {
    int factor = 0;             ///< 1-based, in report order
    std::string label;          ///< winning feature group
    double variance_fraction = 0.0;
    bool tied = false;          ///< group scores tied; lower-numbered group won
};

/// Labels each factor by the feature group with the largest mean absolute
/// loading, mirroring the factor-table rows of the reference tables.
std::vector<LabeledFactor> label_factors(const FactorReport& report,
                                         const std::vector<std::string>& groups);

}  // namespace lvc
