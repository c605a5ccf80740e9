#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace lvc {

/// Boundary condition on one side of the domain.
enum class SideCondition {
    DirichletZero,  ///< population pinned to 0 on the side
    ZeroFlux        ///< no migration across the side
};

/// Per-side boundary conditions. Sides are ordered {left, right} in 1D and
/// {left, right, bottom, top} in 2D (x before y, low face before high face).
struct BoundaryConfig {
    int dim = 1;
    std::array<SideCondition, 4> sides{};

    int side_count() const { return 2 * dim; }

    static BoundaryConfig config_1d();   ///< 1D, both sides Dirichlet-zero
    static BoundaryConfig config_2da();  ///< 2D, all four sides Dirichlet-zero
    static BoundaryConfig config_2db();  ///< 2D, left/right Dirichlet-zero, top/bottom zero-flux
    static BoundaryConfig all_zero_flux(int dim);
};

/// Uniform cell-centered finite-volume grid on [0,L]^d, d = 1 or 2.
/// Cell centers sit at (i + 1/2) h per axis; |K| = h^d for every cell.
struct Grid {
    int dim = 1;
    int cells_per_axis = 1;
    double length = 1.0;
    double h = 1.0;
    BoundaryConfig boundary;

    std::size_t cell_count() const {
        std::size_t n = static_cast<std::size_t>(cells_per_axis);
        return dim == 1 ? n : n * n;
    }
    double cell_volume() const { return dim == 1 ? h : h * h; }
    double cell_center(int index_along_axis) const { return (index_along_axis + 0.5) * h; }
};

Grid build_grid(int dim, int cells_per_axis, double length, const BoundaryConfig& boundary);

/// Named domain configuration: boundary preset plus default grid size.
/// The default edge length of 3 puts the slowest Dirichlet decay mode at
/// eps*(pi/3)^2, which is what the survival thresholds of the reference
/// case studies require (about 0.07 in 1D, 0.04 with all sides fixed).
struct Scenario {
    std::string name;  ///< "1d", "2da" or "2db"
    int dim = 1;
    int cells_per_axis = 100;
    double length = 3.0;
    BoundaryConfig boundary;

    Grid make_grid() const { return build_grid(dim, cells_per_axis, length, boundary); }

    static Scenario config_1d();
    static Scenario config_2da();
    static Scenario config_2db();
    static Scenario by_name(const std::string& name);  ///< throws on unknown name
};

/// Face coefficient T = eps |e| / d between two adjacent cell averages:
/// d = h and |e| = 1 in 1D, |e| = h in 2D, so T = eps/h in 1D and eps in 2D.
double interior_transmissibility(const Grid& grid, double eps_k);

/// Per-species diffusion operator in stencil form. Entries are stored once
/// per face so the matrix is symmetric by construction:
///
///   (A u)_i = sum_{j in neighbors} T_ij (u_i - u_j) + Tb_i u_i
///
/// where Tb_i collects Dirichlet boundary-face contributions eps |e| / (h/2)
/// (half-cell distance from center to face). Zero-flux faces contribute
/// nothing. diag holds the full row diagonal (sum of face T's plus Tb).
struct StencilOperator {
    int nx = 1;
    int ny = 1;  ///< 1 in 1D
    std::vector<double> diag;    ///< nx*ny
    std::vector<double> face_x;  ///< (nx-1)*ny, face between (ix,iy) and (ix+1,iy)
    std::vector<double> face_y;  ///< nx*(ny-1), face between (ix,iy) and (ix,iy+1)

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }

    /// y = (shift*I + A) u, the matrix applied at each semi-implicit step.
    void apply(double shift, const double* u, double* y) const;

    /// Dirichlet boundary transmissibility total for cell i (the row sum).
    double row_sum(std::size_t i) const;

    /// Dense copy, for small-system tests.
    std::vector<double> to_dense() const;
};

StencilOperator assemble_operator(const Grid& grid, double eps_k);

}  // namespace lvc
