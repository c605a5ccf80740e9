#include "lvc/grid.hpp"

#include <stdexcept>

#include "lvc/kernels.hpp"

namespace lvc {

BoundaryConfig BoundaryConfig::config_1d() {
    return {1, {SideCondition::DirichletZero, SideCondition::DirichletZero}};
}

BoundaryConfig BoundaryConfig::config_2da() {
    return {2,
            {SideCondition::DirichletZero, SideCondition::DirichletZero, SideCondition::DirichletZero,
             SideCondition::DirichletZero}};
}

BoundaryConfig BoundaryConfig::config_2db() {
    return {2,
            {SideCondition::DirichletZero, SideCondition::DirichletZero, SideCondition::ZeroFlux,
             SideCondition::ZeroFlux}};
}

BoundaryConfig BoundaryConfig::all_zero_flux(int dim) {
    BoundaryConfig b;
    b.dim = dim;
    b.sides.fill(SideCondition::ZeroFlux);
    return b;
}

Scenario Scenario::config_1d() { return {"1d", 1, 100, 3.0, BoundaryConfig::config_1d()}; }

Scenario Scenario::config_2da() { return {"2da", 2, 25, 3.0, BoundaryConfig::config_2da()}; }

Scenario Scenario::config_2db() { return {"2db", 2, 25, 3.0, BoundaryConfig::config_2db()}; }

Scenario Scenario::by_name(const std::string& name) {
    if (name == "1d") return config_1d();
    if (name == "2da") return config_2da();
    if (name == "2db") return config_2db();
    throw std::invalid_argument("unknown scenario '" + name + "' (expected 1d, 2da or 2db)");
}

Grid build_grid(int dim, int cells_per_axis, double length, const BoundaryConfig& boundary) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
    if (cells_per_axis < 1) throw std::invalid_argument("cells_per_axis must be >= 1");
    if (!(length > 0.0)) throw std::invalid_argument("domain length must be positive");
    if (boundary.dim != dim) throw std::invalid_argument("boundary configuration dimension mismatch");
    Grid g;
    g.dim = dim;
    g.cells_per_axis = cells_per_axis;
    g.length = length;
    g.h = length / cells_per_axis;
    g.boundary = boundary;
    return g;
}

double interior_transmissibility(const Grid& grid, double eps_k) {
    if (!(eps_k > 0.0)) throw std::invalid_argument("diffusion coefficient must be positive");
    // T = eps |e| / d with d = h, |e| = 1 (1D) or h (2D)
    return grid.dim == 1 ? eps_k / grid.h : eps_k;
}

StencilOperator assemble_operator(const Grid& grid, double eps_k) {
    const double t_face = interior_transmissibility(grid, eps_k);
    // Dirichlet boundary faces sit at half-cell distance from the center:
    // T_b = eps |e| / (h/2) = 2 * t_face.
    const double t_boundary = 2.0 * t_face;

    StencilOperator op;
    op.nx = grid.cells_per_axis;
    op.ny = grid.dim == 2 ? grid.cells_per_axis : 1;
    const int nx = op.nx, ny = op.ny;
    op.diag.assign(static_cast<std::size_t>(nx) * ny, 0.0);
    op.face_x.assign(static_cast<std::size_t>(nx - 1) * ny, t_face);
    if (grid.dim == 2) op.face_y.assign(static_cast<std::size_t>(nx) * (ny - 1), t_face);

    auto at = [nx](int ix, int iy) { return static_cast<std::size_t>(iy) * nx + ix; };

    // interior faces enter the two adjacent diagonals once each
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix + 1 < nx; ++ix) {
            op.diag[at(ix, iy)] += t_face;
            op.diag[at(ix + 1, iy)] += t_face;
        }
    }
    for (int iy = 0; iy + 1 < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            op.diag[at(ix, iy)] += t_face;
            op.diag[at(ix, iy + 1)] += t_face;
        }
    }

    const auto& sides = grid.boundary.sides;
    for (int iy = 0; iy < ny; ++iy) {
        if (sides[0] == SideCondition::DirichletZero) op.diag[at(0, iy)] += t_boundary;
        if (sides[1] == SideCondition::DirichletZero) op.diag[at(nx - 1, iy)] += t_boundary;
    }
    if (grid.dim == 2) {
        for (int ix = 0; ix < nx; ++ix) {
            if (sides[2] == SideCondition::DirichletZero) op.diag[at(ix, 0)] += t_boundary;
            if (sides[3] == SideCondition::DirichletZero) op.diag[at(ix, ny - 1)] += t_boundary;
        }
    }
    return op;
}

void StencilOperator::apply(double shift, const double* u, double* y) const {
    kernels::ops().stencil_apply(nx, ny, diag.data(), face_x.data(), face_y.data(), shift, u, y);
}

double StencilOperator::row_sum(std::size_t i) const {
    const int ix = static_cast<int>(i) % nx;
    const int iy = static_cast<int>(i) / nx;
    double s = diag[i];
    const int fx_stride = nx - 1;
    if (ix > 0) s -= face_x[static_cast<std::size_t>(iy) * fx_stride + ix - 1];
    if (ix < nx - 1) s -= face_x[static_cast<std::size_t>(iy) * fx_stride + ix];
    if (iy > 0) s -= face_y[static_cast<std::size_t>(iy - 1) * nx + ix];
    if (iy < ny - 1) s -= face_y[static_cast<std::size_t>(iy) * nx + ix];
    return s;
}

std::vector<double> StencilOperator::to_dense() const {
    const std::size_t n = size();
    std::vector<double> dense(n * n, 0.0);
    const int fx_stride = nx - 1;
    for (std::size_t i = 0; i < n; ++i) {
        const int ix = static_cast<int>(i) % nx;
        const int iy = static_cast<int>(i) / nx;
        dense[i * n + i] = diag[i];
        if (ix > 0) dense[i * n + (i - 1)] = -face_x[static_cast<std::size_t>(iy) * fx_stride + ix - 1];
        if (ix < nx - 1) dense[i * n + (i + 1)] = -face_x[static_cast<std::size_t>(iy) * fx_stride + ix];
        if (iy > 0) dense[i * n + (i - nx)] = -face_y[static_cast<std::size_t>(iy - 1) * nx + ix];
        if (iy < ny - 1) dense[i * n + (i + nx)] = -face_y[static_cast<std::size_t>(iy) * nx + ix];
    }
    return dense;
}

}  // namespace lvc
