#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "bernstein/fields.hpp"
#include "bernstein/operators.hpp"

namespace bernstein {

/// Uniform tensor grid on [x0,x1] x [y0,y1] with nx * ny nodes.
struct GridSpec {
    double x0 = 0.0, x1 = 1.0;
    double y0 = 0.0, y1 = 1.0;
    int nx = 3, ny = 3;

    double hx() const { return (x1 - x0) / (nx - 1); }
    double hy() const { return (y1 - y0) / (ny - 1); }
    double x(int i) const { return x0 + i * hx(); }
    double y(int j) const { return y0 + j * hy(); }
    int index(int i, int j) const { return j * nx + i; }
    int size() const { return nx * ny; }
    bool boundary(int i, int j) const {
        return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
    }

    void validate() const;
};

/// Nodal values over a GridSpec, row-major (y-major rows).
struct GridFunction {
    GridSpec grid;
    std::vector<double> values;

    double& at(int i, int j) { return values[grid.index(i, j)]; }
    double at(int i, int j) const { return values[grid.index(i, j)]; }
};

/// Samples a scalar field at every node.
GridFunction sample_field(const ScalarField2& field, const GridSpec& grid);

enum class InitialGuess { boundary_blend, zeros, supplied };

struct NewtonOptions {
    int max_iterations = 20;
    /// convergence on the max interior FD residual
    double tolerance = 1e-10;
    /// backtracking halving stops at this step fraction
    double min_step = 1.0 / 1024.0;
    InitialGuess initial_guess = InitialGuess::boundary_blend;
    GridFunction supplied; // used when initial_guess == supplied
};

struct SolveStats {
    int iterations = 0;
    double max_residual = 0.0;
    bool elliptic_warning = false; // params failed the ellipticity rule
    /// residual 2-norm after the initial guess and each accepted step
    std::vector<double> residual_history;
};

using BoundaryProvider = std::function<double(double x, double y)>;

/// Newton solve of the Dirichlet problem for L[u] = 0 on the grid:
/// second-order central stencils, analytic banded Jacobian, LAPACK banded
/// factorization, damping by residual-norm backtracking. Boundary nodes
/// carry the boundary data exactly. Throws ConvergenceError /
/// LinearSolveError on failure.
GridFunction solve_dirichlet(OperatorParams params, const GridSpec& grid,
                             const BoundaryProvider& boundary,
                             const NewtonOptions& opts = {},
                             SolveStats* stats = nullptr);

struct ResidualReport {
    double max_abs = 0.0;
    double rms = 0.0;
    int worst_node = -1; // flat grid index
};

/// FD residual of L at all interior nodes.
ResidualReport residual_grid(OperatorParams params, const GridFunction& u);

/// CSV round-trip. Header row "nx,ny,x0,x1,y0,y1", then one value per
/// line, row-major, full precision.
void write_csv(const GridFunction& u, std::ostream& os);
void write_csv_file(const GridFunction& u, const std::string& path);
GridFunction read_csv(std::istream& is);
GridFunction read_csv_file(const std::string& path);

} // namespace bernstein
