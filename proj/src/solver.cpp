#include "bernstein/solver.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <lapacke.h>

namespace bernstein {

void GridSpec::validate() const {
    if (!(x1 > x0) || !(y1 > y0)) {
        throw std::invalid_argument("grid rectangle must be non-degenerate");
    }
    if (nx < 3 || ny < 3) {
        throw std::invalid_argument("grid needs at least 3 nodes per side");
    }
}

GridFunction sample_field(const ScalarField2& field, const GridSpec& grid) {
    grid.validate();
    GridFunction u{grid, std::vector<double>(static_cast<size_t>(grid.size()))};
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            u.at(i, j) = field.jet({grid.x(i), grid.y(j)}).value;
        }
    }
    return u;
}

namespace {

struct QuasilinearCoeffs {
    double A, B, C;   // principal part at the FD gradient
    double Gp, Gq;    // d(residual)/d(ux), d(residual)/d(uy)
};

// FD jet at an interior node from the 9-point neighborhood.
Jet2 fd_node_jet(const GridFunction& u, int i, int j) {
    const GridSpec& g = u.grid;
    const double hx = g.hx(), hy = g.hy();
    Jet2 jet;
    jet.value = u.at(i, j);
    jet.ux = (u.at(i + 1, j) - u.at(i - 1, j)) / (2.0 * hx);
    jet.uy = (u.at(i, j + 1) - u.at(i, j - 1)) / (2.0 * hy);
    jet.uxx = (u.at(i + 1, j) - 2.0 * u.at(i, j) + u.at(i - 1, j)) / (hx * hx);
    jet.uyy = (u.at(i, j + 1) - 2.0 * u.at(i, j) + u.at(i, j - 1)) / (hy * hy);
    jet.uxy = (u.at(i + 1, j + 1) - u.at(i + 1, j - 1) - u.at(i - 1, j + 1) +
               u.at(i - 1, j - 1)) /
              (4.0 * hx * hy);
    return jet;
}

QuasilinearCoeffs coeffs_at(OperatorParams params, const Jet2& jet) {
    const double g = params.gamma, e = params.epsilon;
    const double p = jet.ux, q = jet.uy;
    QuasilinearCoeffs c;
    c.A = 2.0 * e + (g + 1.0) * p * p + (g - 1.0) * q * q;
    c.B = 4.0 * p * q;
    c.C = 2.0 * e + (g - 1.0) * p * p + (g + 1.0) * q * q;
    c.Gp = 2.0 * (g + 1.0) * p * jet.uxx + 4.0 * q * jet.uxy +
           2.0 * (g - 1.0) * p * jet.uyy;
    c.Gq = 2.0 * (g - 1.0) * q * jet.uxx + 4.0 * p * jet.uxy +
           2.0 * (g + 1.0) * q * jet.uyy;
    return c;
}

// Banded column-major storage for LAPACK dgbsv (extra kl rows for fill-in).
class BandedMatrix {
public:
    BandedMatrix(int n, int kl, int ku)
        : n_(n), kl_(kl), ku_(ku), ldab_(2 * kl + ku + 1),
          ab_(static_cast<size_t>(ldab_) * n, 0.0) {}

    void add(int i, int j, double v) {
        ab_[static_cast<size_t>(j) * ldab_ + (kl_ + ku_ + i - j)] += v;
    }

    // Solves in place; returns LAPACK info.
    int solve(std::vector<double>& rhs) {
        std::vector<lapack_int> ipiv(n_);
        return LAPACKE_dgbsv(LAPACK_COL_MAJOR, n_, kl_, ku_, 1, ab_.data(),
                             ldab_, ipiv.data(), rhs.data(), n_);
    }

private:
    int n_, kl_, ku_, ldab_;
    std::vector<double> ab_;
};

void interior_residual(OperatorParams params, const GridFunction& u,
                       std::vector<double>& r) {
    const GridSpec& g = u.grid;
    const int mx = g.nx - 2;
    for (int j = 1; j < g.ny - 1; ++j) {
        for (int i = 1; i < g.nx - 1; ++i) {
            const Jet2 jet = fd_node_jet(u, i, j);
            r[static_cast<size_t>(j - 1) * mx + (i - 1)] =
                l_residual(params, jet);
        }
    }
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

GridFunction initial_grid(const GridSpec& grid, const BoundaryProvider& bdry,
                          const NewtonOptions& opts) {
    GridFunction u{grid, std::vector<double>(static_cast<size_t>(grid.size()), 0.0)};
    if (opts.initial_guess == InitialGuess::supplied) {
        if (opts.supplied.values.size() != u.values.size()) {
            throw std::invalid_argument("supplied initial guess has wrong size");
        }
        u = opts.supplied;
    }
    // Boundary values are imposed exactly in every mode.
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            if (grid.boundary(i, j)) u.at(i, j) = bdry(grid.x(i), grid.y(j));
        }
    }
    if (opts.initial_guess == InitialGuess::boundary_blend) {
        // Transfinite bilinear blend of the boundary data (Coons patch);
        // reproduces affine data exactly.
        for (int j = 1; j < grid.ny - 1; ++j) {
            for (int i = 1; i < grid.nx - 1; ++i) {
                const double xi = static_cast<double>(i) / (grid.nx - 1);
                const double eta = static_cast<double>(j) / (grid.ny - 1);
                const double left = u.at(0, j), right = u.at(grid.nx - 1, j);
                const double bottom = u.at(i, 0), top = u.at(i, grid.ny - 1);
                const double c00 = u.at(0, 0), c10 = u.at(grid.nx - 1, 0);
                const double c01 = u.at(0, grid.ny - 1);
                const double c11 = u.at(grid.nx - 1, grid.ny - 1);
                u.at(i, j) = (1.0 - xi) * left + xi * right +
                             (1.0 - eta) * bottom + eta * top -
                             ((1.0 - xi) * (1.0 - eta) * c00 +
                              xi * (1.0 - eta) * c10 +
                              (1.0 - xi) * eta * c01 + xi * eta * c11);
            }
        }
    }
    return u;
}

} // namespace

GridFunction solve_dirichlet(OperatorParams params, const GridSpec& grid,
                             const BoundaryProvider& boundary,
                             const NewtonOptions& opts, SolveStats* stats) {
    grid.validate();
    if (!(opts.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }

    const bool elliptic = ellipticity(params).elliptic;
    if (!elliptic) {
        std::cerr << "solve_dirichlet: warning: parameters (gamma="
                  << params.gamma << ", epsilon=" << params.epsilon
                  << ") are not elliptic; Newton may not converge\n";
    }

    GridFunction u = initial_grid(grid, boundary, opts);
    for (double v : u.values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("non-finite boundary or initial data");
        }
    }

    const int mx = grid.nx - 2, my = grid.ny - 2;
    const int m = mx * my;
    const int band = mx + 1; // diagonal neighbor offset
    const double hx = grid.hx(), hy = grid.hy();

    std::vector<double> r(static_cast<size_t>(m));
    interior_residual(params, u, r);
    double rnorm = norm2(r);
    std::vector<double> history{rnorm};

    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        if (max_abs(r) <= opts.tolerance) break;

        BandedMatrix J(m, band, band);
        for (int j = 1; j <= my; ++j) {
            for (int i = 1; i <= mx; ++i) {
                const int row = (j - 1) * mx + (i - 1);
                const Jet2 jet = fd_node_jet(u, i, j);
                const QuasilinearCoeffs c = coeffs_at(params, jet);

                const auto stencil = [&](int di, int dj, double v) {
                    const int ii = i + di, jj = j + dj;
                    if (grid.boundary(ii, jj)) return; // known value
                    J.add(row, (jj - 1) * mx + (ii - 1), v);
                };

                stencil(0, 0, -2.0 * c.A / (hx * hx) - 2.0 * c.C / (hy * hy));
                stencil(1, 0, c.A / (hx * hx) + c.Gp / (2.0 * hx));
                stencil(-1, 0, c.A / (hx * hx) - c.Gp / (2.0 * hx));
                stencil(0, 1, c.C / (hy * hy) + c.Gq / (2.0 * hy));
                stencil(0, -1, c.C / (hy * hy) - c.Gq / (2.0 * hy));
                stencil(1, 1, c.B / (4.0 * hx * hy));
                stencil(-1, -1, c.B / (4.0 * hx * hy));
                stencil(1, -1, -c.B / (4.0 * hx * hy));
                stencil(-1, 1, -c.B / (4.0 * hx * hy));
            }
        }

        std::vector<double> step(r);
        for (double& v : step) v = -v;
        const int info = J.solve(step);
        if (info != 0) {
            throw LinearSolveError("singular Newton system (dgbsv info=" +
                                       std::to_string(info) + ")",
                                   iter);
        }
        for (double v : step) {
            if (!std::isfinite(v)) {
                throw LinearSolveError("non-finite Newton step", iter);
            }
        }

        // Backtracking on the residual 2-norm.
        double alpha = 1.0;
        bool accepted = false;
        GridFunction trial = u;
        std::vector<double> rt(static_cast<size_t>(m));
        while (alpha >= opts.min_step) {
            for (int j = 1; j <= my; ++j) {
                for (int i = 1; i <= mx; ++i) {
                    trial.at(i, j) =
                        u.at(i, j) + alpha * step[(j - 1) * mx + (i - 1)];
                }
            }
            interior_residual(params, trial, rt);
            if (norm2(rt) < rnorm) {
                accepted = true;
                break;
            }
            alpha *= 0.5;
        }
        if (!accepted) {
            throw ConvergenceError(
                "backtracking could not reduce the residual (step floor "
                "reached)",
                iter);
        }
        u = std::move(trial);
        r = std::move(rt);
        rnorm = norm2(r);
        history.push_back(rnorm);
    }

    const double final_residual = max_abs(r);
    if (final_residual > opts.tolerance) {
        throw ConvergenceError("Newton did not reach tolerance " +
                                   std::to_string(opts.tolerance) + " (residual " +
                                   std::to_string(final_residual) + ")",
                               iter);
    }
    if (stats) {
        stats->iterations = iter;
        stats->max_residual = final_residual;
        stats->elliptic_warning = !elliptic;
        stats->residual_history = std::move(history);
    }
    return u;
}

ResidualReport residual_grid(OperatorParams params, const GridFunction& u) {
    u.grid.validate();
    if (u.values.size() != static_cast<size_t>(u.grid.size())) {
        throw std::invalid_argument("grid function has wrong value count");
    }
    ResidualReport rep;
    double sum2 = 0.0;
    int count = 0;
    for (int j = 1; j < u.grid.ny - 1; ++j) {
        for (int i = 1; i < u.grid.nx - 1; ++i) {
            const double r = l_residual(params, fd_node_jet(u, i, j));
            sum2 += r * r;
            ++count;
            if (std::abs(r) > rep.max_abs) {
                rep.max_abs = std::abs(r);
                rep.worst_node = u.grid.index(i, j);
            }
        }
    }
    rep.rms = count > 0 ? std::sqrt(sum2 / count) : 0.0;
    return rep;
}

void write_csv(const GridFunction& u, std::ostream& os) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g,%.17g\n",
                  u.grid.nx, u.grid.ny, u.grid.x0, u.grid.x1, u.grid.y0,
                  u.grid.y1);
    os << buf;
    for (double v : u.values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        os << buf;
    }
}

void write_csv_file(const GridFunction& u, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open '" + path + "' for writing");
    write_csv(u, os);
}

GridFunction read_csv(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw Error("empty grid CSV");
    GridSpec g;
    {
        std::istringstream hs(header);
        std::string tok;
        double fields[6];
        for (double& f : fields) {
            if (!std::getline(hs, tok, ',')) {
                throw Error("grid CSV header needs nx,ny,x0,x1,y0,y1");
            }
            f = std::stod(tok);
        }
        g.nx = static_cast<int>(fields[0]);
        g.ny = static_cast<int>(fields[1]);
        g.x0 = fields[2];
        g.x1 = fields[3];
        g.y0 = fields[4];
        g.y1 = fields[5];
    }
    g.validate();
    GridFunction u{g, {}};
    u.values.reserve(static_cast<size_t>(g.size()));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const double v = std::stod(line);
        if (!std::isfinite(v)) throw Error("grid CSV contains non-finite value");
        u.values.push_back(v);
    }
    if (u.values.size() != static_cast<size_t>(g.size())) {
        throw Error("grid CSV value count mismatch: expected " +
                    std::to_string(g.size()) + ", got " +
                    std::to_string(u.values.size()));
    }
    return u;
}

GridFunction read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open '" + path + "'");
    return read_csv(is);
}

} // namespace bernstein
