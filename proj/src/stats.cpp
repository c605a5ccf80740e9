#include "lvc/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lvc {

FeatureMatrix build_features(const std::vector<SweepRecord>& records, int species_count) {
    const int m = species_count;
    FeatureMatrix fm;
    auto add_column = [&](const std::string& name, const std::string& group) {
        fm.names.push_back(name);
        fm.groups.push_back(group);
        fm.columns.emplace_back();
    };
    for (int k = 0; k < m; ++k)
        add_column("eps_" + std::to_string(k + 1), "Diffusion " + std::to_string(k + 1));
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
            if (l != k)
                add_column("alpha_" + std::to_string(k + 1) + std::to_string(l + 1) + "/r_" +
                               std::to_string(k + 1),
                           "Grow Compete " + std::to_string(k + 1));
    for (int k = 0; k < m; ++k)
        add_column("u0_" + std::to_string(k + 1), "Init. Pop. " + std::to_string(k + 1));
    for (int k = 0; k < m; ++k)
        add_column("final_" + std::to_string(k + 1), "Fin. Pop. " + std::to_string(k + 1));

    for (const auto& rec : records) {
        if (!rec.converged) continue;
        int c = 0;
        for (int k = 0; k < m; ++k)
            fm.columns[c++].push_back(rec.parameter("eps_" + std::to_string(k + 1)));
        for (int k = 0; k < m; ++k) {
            const double rk = rec.parameter("r_" + std::to_string(k + 1));
            for (int l = 0; l < m; ++l)
                if (l != k)
                    fm.columns[c++].push_back(
                        rec.parameter("alpha_" + std::to_string(k + 1) + std::to_string(l + 1)) / rk);
        }
        for (int k = 0; k < m; ++k)
            fm.columns[c++].push_back(rec.parameter("u0_" + std::to_string(k + 1)));
        for (int k = 0; k < m; ++k) fm.columns[c++].push_back(rec.final_averages[k]);
        ++fm.row_count;
    }
    if (fm.row_count == 0) throw std::invalid_argument("no converged records to build features from");
    return fm;
}

std::vector<double> correlation_matrix(const FeatureMatrix& features) {
    const int p = features.feature_count();
    const std::size_t n = features.row_count;
    if (n < 2) throw std::invalid_argument("correlation needs at least 2 rows");

    // standardize columns (sample std)
    std::vector<std::vector<double>> z(p);
    for (int j = 0; j < p; ++j) {
        const auto& col = features.columns[j];
        const double mean = std::accumulate(col.begin(), col.end(), 0.0) / static_cast<double>(n);
        double var = 0.0;
        for (double v : col) var += (v - mean) * (v - mean);
        var /= static_cast<double>(n - 1);
        // cancellation noise in (v - mean) makes a constant column read as
        // variance ~ (ulp(mean))^2, not exactly zero
        const double floor = 1e-13 * (1.0 + std::fabs(mean));
        if (!(var > floor * floor))
            throw std::invalid_argument("feature column '" + features.names[j] + "' has zero variance");
        const double inv_std = 1.0 / std::sqrt(var);
        z[j].reserve(n);
        for (double v : col) z[j].push_back((v - mean) * inv_std);
    }

    std::vector<double> corr(static_cast<std::size_t>(p) * p, 0.0);
    for (int i = 0; i < p; ++i) {
        corr[static_cast<std::size_t>(i) * p + i] = 1.0;
        for (int j = i + 1; j < p; ++j) {
            double s = 0.0;
            for (std::size_t row = 0; row < n; ++row) s += z[i][row] * z[j][row];
            const double c = s / static_cast<double>(n - 1);
            corr[static_cast<std::size_t>(i) * p + j] = c;
            corr[static_cast<std::size_t>(j) * p + i] = c;
        }
    }
    return corr;
}

void symmetric_eigen(const std::vector<double>& matrix, int n, std::vector<double>& eigenvalues,
                     std::vector<double>& eigenvectors) {
    if (static_cast<int>(matrix.size()) != n * n)
        throw std::invalid_argument("matrix size does not match dimension");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(matrix[static_cast<std::size_t>(i) * n + j] -
                          matrix[static_cast<std::size_t>(j) * n + i]) > 1e-12)
                throw std::invalid_argument("eigen-decomposition requires a symmetric matrix");

    std::vector<double> a = matrix;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    auto at = [n](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * n + j];
    };

    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(a, i, j) * at(a, i, j);
        if (off < 1e-26) break;

        for (int pidx = 0; pidx < n - 1; ++pidx) {
            for (int q = pidx + 1; q < n; ++q) {
                const double apq = at(a, pidx, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double app = at(a, pidx, pidx);
                const double aqq = at(a, q, q);
                const double theta = 0.5 * (aqq - app) / apq;
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int i = 0; i < n; ++i) {
                    const double aip = at(a, i, pidx);
                    const double aiq = at(a, i, q);
                    at(a, i, pidx) = c * aip - s * aiq;
                    at(a, i, q) = s * aip + c * aiq;
                }
                for (int j = 0; j < n; ++j) {
                    const double apj = at(a, pidx, j);
                    const double aqj = at(a, q, j);
                    at(a, pidx, j) = c * apj - s * aqj;
                    at(a, q, j) = s * apj + c * aqj;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = at(v, i, pidx);
                    const double viq = at(v, i, q);
                    at(v, i, pidx) = c * vip - s * viq;
                    at(v, i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = a[static_cast<std::size_t>(i) * n + i];
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] > diag[j]; });

    eigenvalues.resize(n);
    eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        eigenvalues[j] = diag[order[j]];
        for (int i = 0; i < n; ++i)
            eigenvectors[static_cast<std::size_t>(i) * n + j] = v[static_cast<std::size_t>(i) * n + order[j]];
    }
}

std::vector<double> varimax(const std::vector<double>& loadings, int p, int f) {
    if (static_cast<int>(loadings.size()) != p * f)
        throw std::invalid_argument("loading matrix size does not match dimensions");
    if (f < 2) return loadings;

    // Kaiser normalization: rotate rows scaled to unit communality
    std::vector<double> h(p, 0.0);
    for (int i = 0; i < p; ++i) {
        double c = 0.0;
        for (int j = 0; j < f; ++j) {
            const double l = loadings[static_cast<std::size_t>(i) * f + j];
            c += l * l;
        }
        h[i] = std::sqrt(c);
    }
    std::vector<double> b = loadings;
    for (int i = 0; i < p; ++i) {
        if (h[i] > 0.0)
            for (int j = 0; j < f; ++j) b[static_cast<std::size_t>(i) * f + j] /= h[i];
    }

    auto at = [f](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * f + j];
    };

    const double np = static_cast<double>(p);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double total_rotation = 0.0;
        for (int col_p = 0; col_p < f - 1; ++col_p) {
            for (int col_q = col_p + 1; col_q < f; ++col_q) {
                double a_sum = 0.0, b_sum = 0.0, c_sum = 0.0, d_sum = 0.0;
                for (int i = 0; i < p; ++i) {
                    const double x = at(b, i, col_p);
                    const double y = at(b, i, col_q);
                    const double u = x * x - y * y;
                    const double w = 2.0 * x * y;
                    a_sum += u;
                    b_sum += w;
                    c_sum += u * u - w * w;
                    d_sum += 2.0 * u * w;
                }
                const double num = d_sum - 2.0 * a_sum * b_sum / np;
                const double den = c_sum - (a_sum * a_sum - b_sum * b_sum) / np;
                const double phi = 0.25 * std::atan2(num, den);
                if (std::fabs(phi) < 1e-12) continue;
                total_rotation += std::fabs(phi);
                const double cphi = std::cos(phi);
                const double sphi = std::sin(phi);
                for (int i = 0; i < p; ++i) {
                    const double x = at(b, i, col_p);
                    const double y = at(b, i, col_q);
                    at(b, i, col_p) = cphi * x + sphi * y;
                    at(b, i, col_q) = -sphi * x + cphi * y;
                }
            }
        }
        if (total_rotation < 1e-10) break;
    }

    for (int i = 0; i < p; ++i)
        for (int j = 0; j < f; ++j) b[static_cast<std::size_t>(i) * f + j] *= h[i];
    return b;
}

FactorReport extract_factors(const std::vector<double>& correlation, int feature_count,
                             int retain_count) {
    const int p = feature_count;
    const int f = retain_count;
    if (f < 1 || f > p) throw std::invalid_argument("retain_count must be in [1, P]");

    std::vector<double> eigenvalues, eigenvectors;
    symmetric_eigen(correlation, p, eigenvalues, eigenvectors);

    // unrotated loadings: column j = v_j * sqrt(lambda_j)
    std::vector<double> loadings(static_cast<std::size_t>(p) * f, 0.0);
    for (int j = 0; j < f; ++j) {
        const double scale = std::sqrt(std::max(eigenvalues[j], 0.0));
        for (int i = 0; i < p; ++i)
            loadings[static_cast<std::size_t>(i) * f + j] =
                eigenvectors[static_cast<std::size_t>(i) * p + j] * scale;
    }

    std::vector<double> rotated = varimax(loadings, p, f);

    // per-factor variance after rotation, then order factors by it
    std::vector<double> variance(f, 0.0);
    for (int j = 0; j < f; ++j)
        for (int i = 0; i < p; ++i) {
            const double l = rotated[static_cast<std::size_t>(i) * f + j];
            variance[j] += l * l;
        }
    std::vector<int> order(f);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return variance[a] > variance[b]; });

    FactorReport report;
    report.feature_count = p;
    report.factor_count = f;
    report.correlation = correlation;
    report.loadings.assign(static_cast<std::size_t>(p) * f, 0.0);
    report.explained_variance.resize(f);
    for (int jj = 0; jj < f; ++jj) {
        const int src = order[jj];
        // sign convention: largest-magnitude entry positive
        double peak = 0.0;
        for (int i = 0; i < p; ++i) {
            const double l = rotated[static_cast<std::size_t>(i) * f + src];
            if (std::fabs(l) > std::fabs(peak)) peak = l;
        }
        const double sign = peak < 0.0 ? -1.0 : 1.0;
        for (int i = 0; i < p; ++i)
            report.loadings[static_cast<std::size_t>(i) * f + jj] =
                sign * rotated[static_cast<std::size_t>(i) * f + src];
        report.explained_variance[jj] = variance[src] / static_cast<double>(p);
    }

    double retained = 0.0;
    for (int j = 0; j < f; ++j) retained += eigenvalues[j];
    report.cumulative_variance = retained / static_cast<double>(p);
    return report;
}

std::vector<LabeledFactor> label_factors(const FactorReport& report,
                                         const std::vector<std::string>& groups) {
    const int p = report.feature_count;
    const int f = report.factor_count;
    if (static_cast<int>(groups.size()) != p)
        throw std::invalid_argument("group list length does not match feature count");

    // distinct groups in first-appearance order ("lower-numbered" tie-break)
    std::vector<std::string> group_names;
    for (const auto& g : groups)
        if (std::find(group_names.begin(), group_names.end(), g) == group_names.end())
            group_names.push_back(g);

    std::vector<LabeledFactor> out;
    out.reserve(f);
    for (int j = 0; j < f; ++j) {
        LabeledFactor lf;
        lf.factor = j + 1;
        lf.variance_fraction = report.explained_variance[j];
        double best = -1.0;
        for (const auto& g : group_names) {
            double score = 0.0;
            int count = 0;
            for (int i = 0; i < p; ++i) {
                if (groups[i] != g) continue;
                score += std::fabs(report.loadings[static_cast<std::size_t>(i) * f + j]);
                ++count;
            }
            score /= static_cast<double>(count);
            if (score > best) {
                best = score;
                lf.label = g;
                lf.tied = false;
            } else if (score == best) {
                lf.tied = true;  // keep the earlier (lower-numbered) group
            }
        }
        out.push_back(std::move(lf));
    }
    return out;
}

}  // namespace lvc
