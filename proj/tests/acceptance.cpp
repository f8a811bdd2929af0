// Acceptance suite: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bernstein/constructions.hpp"
#include "bernstein/fields.hpp"
#include "bernstein/knowledge.hpp"
#include "bernstein/operators.hpp"
#include "bernstein/quadrature.hpp"
#include "bernstein/solver.hpp"
#include "bernstein/variational.hpp"
#include "testutil.hpp"

using namespace bernstein;
using testutil::Rng;
using testutil::rel_err;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass,
            const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL",
                criterion, label.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

// 1. Catalog residual suite at 1e-10 over 100 sampled points.
void criterion_catalog() {
    double worst = 0.0;
    bool pass = true;
    for (const CatalogCheck& c : run_catalog_checks(10, 3.0, 1e-10)) {
        worst = std::max(worst, c.max_abs_residual);
        pass = pass && c.pass && c.points == 100;
    }
    report(1, "catalog residual suite", pass,
           "max |L-residual| " + fmt(worst) + " <= 1e-10");
}

// 2. Form identities at 1000 random jets, relative 1e-12.
void criterion_form_identities() {
    Rng rng(90210);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const Jet2 j = rng.jet();
        worst = std::max(
            worst,
            rel_err(l_residual({-1.0, -1.0}, j),
                    -2.0 * named_form_residual(NamedForm::minimal_surface, j)));
        worst = std::max(
            worst, rel_err(l_residual({1.0, 1.0}, j),
                           2.0 * named_form_residual(
                                     NamedForm::wrong_minimal_surface, j)));
        worst = std::max(
            worst,
            rel_err(l_residual({-1.0, 1.0}, j),
                    2.0 * named_form_residual(NamedForm::maximal_surface, j)));
        worst = std::max(
            worst,
            rel_err(l_residual({-1.0, 0.0}, j),
                    -2.0 * named_form_residual(NamedForm::one_laplace_form, j)));
        JetN jn(2);
        jn.set_grad(0, j.ux);
        jn.set_grad(1, j.uy);
        jn.set_hess(0, 0, j.uxx);
        jn.set_hess(0, 1, j.uxy);
        jn.set_hess(1, 1, j.uyy);
        worst = std::max(worst, rel_err(l_residual({1.0, 0.0}, j),
                                        2.0 * infinity_laplace_residual(jn)));
    }
    report(2, "form-identity suite", worst <= 1e-12,
           "max rel err " + fmt(worst) + " <= 1e-12");
}

// 3. p-bridge and exact p <-> gamma round trips.
void criterion_p_bridge() {
    Rng rng(31337);
    double worst = 0.0;
    bool roundtrip = true;
    for (double gamma : {-3.0, -2.0, 1.5, 2.0, 3.0}) {
        const PExponent pe = p_from_gamma(gamma);
        roundtrip = roundtrip && gamma_from_p(pe) == gamma;
        const double p = pe.value;
        for (int k = 0; k < 1000; ++k) {
            const Jet2 j = rng.jet_nonzero_grad();
            const double lhs = l_residual({gamma, 0.0}, j);
            const double rhs = (gamma - 1.0) *
                               std::pow(j.w(), 0.5 * (4.0 - p)) *
                               p_laplace_residual(p, j);
            worst = std::max(worst, rel_err(lhs, rhs));
        }
    }
    report(3, "p-bridge", worst <= 1e-10 && roundtrip,
           "max rel err " + fmt(worst) + " <= 1e-10, round-trips exact: " +
               (roundtrip ? "yes" : "no"));
}

// 4. Variational consistency across the admissible lattice.
void criterion_variational() {
    std::vector<OperatorParams> lattice;
    for (double g : {1.5, 2.0, 3.0}) {
        for (double e : {0.5, 1.0, 2.0}) lattice.push_back({g, e});
    }
    for (double g : {-1.0, -2.0, -3.0}) {
        for (double e : {-0.5, -1.0, -2.0}) lattice.push_back({g, e});
    }
    for (double e : {0.5, 1.0, 2.0}) lattice.push_back({1.0, e});
    for (double g : {-3.0, -2.0, 1.5, 2.0, 3.0}) lattice.push_back({g, 0.0});

    Rng rng(271828);
    double worst_lambda = 0.0, worst_bridge = 0.0;
    for (const OperatorParams p : lattice) {
        const VariationalDensity d(p);
        for (int i = 0; i <= 24; ++i) {
            const double w = 0.1 * std::pow(1000.0, i / 24.0);
            worst_lambda = std::max(
                worst_lambda,
                rel_err(2.0 * d.second(w) / d.first(w), lambda_value(p, w)));
        }
        for (int k = 0; k < 200; ++k) {
            const Jet2 j = rng.jet_nonzero_grad();
            const double w = j.w();
            const double lhs =
                el_residual(p, j) * (2.0 * p.epsilon + (p.gamma - 1.0) * w);
            const double rhs = 2.0 * d.first(w) * l_residual(p, j);
            worst_bridge = std::max(worst_bridge, rel_err(lhs, rhs));
        }
    }
    report(4, "variational consistency",
           worst_lambda <= 1e-8 && worst_bridge <= 1e-10,
           "lambda rel err " + fmt(worst_lambda) + " <= 1e-8, EL-bridge rel err " +
               fmt(worst_bridge) + " <= 1e-10");
}

// 5. Nitsche verdicts with quadrature corroboration.
void criterion_nitsche() {
    bool pass = true;
    std::string detail;
    for (const OperatorParams p :
         {OperatorParams{1.0, 1.0}, OperatorParams{2.0, 1.0},
          OperatorParams{3.0, 1.0}, OperatorParams{-2.0, -1.0},
          OperatorParams{-3.0, -1.0}}) {
        pass = pass && nitsche_verdict(p).verdict == NitscheVerdict::diverges;
    }
    pass = pass &&
           nitsche_verdict({-1.0, -1.0}).verdict == NitscheVerdict::converges;

    double worst = 0.0;
    for (const OperatorParams p :
         {OperatorParams{1.0, 1.0}, OperatorParams{2.0, 1.0},
          OperatorParams{3.0, 1.0}, OperatorParams{-2.0, -1.0},
          OperatorParams{-3.0, -1.0}, OperatorParams{-1.0, -1.0}}) {
        for (double W : {10.0, 100.0, 1000.0}) {
            const double quad = adaptive_simpson(
                [&](double w) { return nitsche_integrand_reduced(p, w); }, 1.0,
                W, 1e-9);
            const double closed =
                nitsche_antiderivative(p, W) - nitsche_antiderivative(p, 1.0);
            worst = std::max(worst, std::abs(quad - closed));
        }
    }
    pass = pass && worst <= 1e-6;
    report(5, "Nitsche verdicts", pass,
           "diverges on the elliptic sample, converges at (-1,-1); quadrature "
           "vs antiderivative " +
               fmt(worst) + " <= 1e-6");
}

// 6. Constructive refutation for the wrong minimal surface equation.
void criterion_construction() {
    bool pass = true;
    double worst = 0.0;
    for (double c : {0.5, 1.0, 3.0}) {
        const SeparableSolution sol(c);
        pass = pass && sol.g().deriv2(0.0) == c;
        const ScalarField2 f = sol.field();
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const Point2 p{-10.0 + 20.0 * i / 19.0,
                               -10.0 + 20.0 * j / 19.0};
                worst = std::max(worst,
                                 std::abs(named_form_residual(
                                     NamedForm::wrong_minimal_surface,
                                     f.jet(p))));
            }
        }
    }
    pass = pass && worst <= 1e-8;
    report(6, "separable construction", pass,
           "max wrong-MSE residual " + fmt(worst) +
               " <= 1e-8 on 400 points, g''(0) = c");
}

// 7. Scaling lemma and epsilon normalization.
void criterion_scaling() {
    Rng rng(161803);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double a = rng.uniform(0.5, 2.0), b = rng.uniform(0.5, 2.0);
        const OperatorParams p = rng.params();
        const Jet2 j = rng.jet();
        Jet2 sj;
        sj.value = a * j.value;
        sj.ux = a * b * j.ux;
        sj.uy = a * b * j.uy;
        sj.uxx = a * b * b * j.uxx;
        sj.uxy = a * b * b * j.uxy;
        sj.uyy = a * b * b * j.uyy;
        const double lhs = l_residual(p, sj);
        const double rhs =
            std::pow(a, 3) * std::pow(b, 4) *
            l_residual({p.gamma, p.epsilon / (a * a * b * b)}, j);
        worst = std::max(worst, rel_err(lhs, rhs));
    }

    double worst_norm = 0.0;
    for (double eps : {0.25, 4.0}) {
        const auto [norm1, scale1] = normalize_epsilon({1.0, eps});
        const ScalarField2 v1 =
            scale_field(build_wrong_mse_solution(1.0), scale1);
        const auto [normm1, scalem1] = normalize_epsilon({-1.0, eps});
        const ScalarField2 vm1 =
            scale_field(catalog(SolutionId::x_plus_h).field, scalem1);
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const Point2 p{-3.0 + 6.0 * i / 9.0, -3.0 + 6.0 * j / 9.0};
                worst_norm = std::max(
                    worst_norm, std::abs(l_residual({1.0, eps}, v1.jet(p))));
                worst_norm = std::max(
                    worst_norm, std::abs(l_residual({-1.0, eps}, vm1.jet(p))));
            }
        }
    }
    for (double eps : {-0.25, -4.0}) {
        const auto [norm, scale] = normalize_epsilon({-1.0, eps});
        const ScalarField2 v =
            scale_field(ScalarField2::affine(0.4, -1.1, 3.0), scale);
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const Point2 p{-3.0 + 6.0 * i / 9.0, -3.0 + 6.0 * j / 9.0};
                worst_norm = std::max(
                    worst_norm, std::abs(l_residual({-1.0, eps}, v.jet(p))));
            }
        }
    }

    report(7, "scaling lemma", worst <= 1e-11 && worst_norm <= 1e-8,
           "identity rel err " + fmt(worst) +
               " <= 1e-11, normalization residual " + fmt(worst_norm) +
               " <= 1e-8");
}

// 8. Holomorphic maps solve the minimal surface system.
void criterion_holomorphic() {
    Rng rng(6174);
    double worst = 0.0;
    for (HolomorphicKind kind : {HolomorphicKind::z1, HolomorphicKind::z2,
                                 HolomorphicKind::z3, HolomorphicKind::exp_z}) {
        for (int k = 0; k < 100; ++k) {
            const auto r =
                mss_residual(holomorphic_map(kind, rng.point(-2.0, 2.0)));
            worst = std::max({worst, std::abs(r[0]), std::abs(r[1])});
        }
    }
    report(8, "holomorphic suite", worst <= 1e-11,
           "max |system residual| " + fmt(worst) + " <= 1e-11");
}

// 9. Golden verdict table.
void criterion_knowledge() {
    struct Expect {
        double gamma, epsilon;
        int dim;
        Regularity reg;
        std::optional<double> bound;
        int codim;
        BernsteinStatus status;
    };
    const std::vector<Expect> golden = {
        // minimal surface equation
        {-1, -1, 2, Regularity::c2, {}, 1, BernsteinStatus::holds},
        {-1, -1, 3, Regularity::c2, {}, 1, BernsteinStatus::holds},
        {-1, -1, 7, Regularity::c2, {}, 1, BernsteinStatus::holds},
        {-1, -1, 8, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {-1, -1, 9, Regularity::c2, {}, 1, BernsteinStatus::fails},
        // elliptic no-Bernstein family
        {1, 1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {2, 1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {3, 1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {-2, -1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {-3, -1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        // p-harmonic association is open
        {2, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::open},
        {-2, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::open},
        {3, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::open},
        // 1-Laplace fails
        {-1, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        // infinity-Laplace
        {1, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::holds},
        {1, 0, 5, Regularity::c4, {}, 1, BernsteinStatus::holds},
        {1, 0, 8, Regularity::c4, {}, 1, BernsteinStatus::holds},
        {1, 0, 5, Regularity::c2, {}, 1, BernsteinStatus::open},
        // gamma = epsilon = 0
        {0, 0, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        // maximal surface
        {-1, 1, 2, Regularity::c2, {}, 1, BernsteinStatus::fails},
        {-1, 1, 2, Regularity::c2, 0.9, 1, BernsteinStatus::conditional_holds},
        {-1, 1, 5, Regularity::c2, 0.5, 1, BernsteinStatus::conditional_holds},
        // minimal surface system, codimension 2
        {-1, -1, 2, Regularity::c2, {}, 2, BernsteinStatus::fails},
        {-1, -1, 3, Regularity::c2, 10.0, 2, BernsteinStatus::conditional_holds},
        {-1, -1, 4, Regularity::c2, 10.0, 2, BernsteinStatus::fails},
        {-1, -1, 5, Regularity::c2, 1.0, 3, BernsteinStatus::fails},
        // isentropic flow note
        {1, -1, 2, Regularity::c2, {}, 1, BernsteinStatus::not_covered},
    };

    int mismatches = 0;
    for (const Expect& e : golden) {
        BernsteinQuery q;
        q.params = {e.gamma, e.epsilon};
        q.dimension = e.dim;
        q.regularity = e.reg;
        q.gradient_bound = e.bound;
        q.codimension = e.codim;
        if (bernstein_verdict(q).status != e.status) ++mismatches;
    }
    report(9, "knowledge-base golden table",
           mismatches == 0,
           std::to_string(golden.size() - mismatches) + "/" +
               std::to_string(golden.size()) + " verdicts match");
}

// 10. Solver convergence on the wrong-MSE Dirichlet problem.
void criterion_solver() {
    const ScalarField2 exact = build_wrong_mse_solution(1.0);
    const auto boundary = [&](double x, double y) {
        return exact.jet({x, y}).value;
    };

    bool pass = true;
    std::vector<double> errors;
    std::string iter_note = "iterations:";
    for (int n : {17, 33, 65}) {
        const GridSpec grid{-1.0, 1.0, -1.0, 1.0, n, n};
        SolveStats stats;
        try {
            const GridFunction u =
                solve_dirichlet({1.0, 1.0}, grid, boundary, {}, &stats);
            pass = pass && stats.iterations <= 20;
            iter_note += " " + std::to_string(stats.iterations);
            double worst = 0.0;
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i < n; ++i) {
                    worst = std::max(
                        worst, std::abs(u.at(i, j) -
                                        exact.jet({grid.x(i), grid.y(j)}).value));
                }
            }
            errors.push_back(worst);
        } catch (const Error&) {
            pass = false;
        }
    }
    std::string ratio_note;
    if (errors.size() == 3) {
        const double r1 = errors[0] / errors[1];
        const double r2 = errors[1] / errors[2];
        pass = pass && r1 >= 3.0 && r2 >= 3.0;
        ratio_note = ", error ratios " + fmt(r1) + ", " + fmt(r2) + " >= 3";
    }

    const ScalarField2 aff = ScalarField2::affine(2.0, 3.0, -1.0);
    SolveStats astats;
    const GridSpec agrid{-1.0, 1.0, -1.0, 1.0, 17, 17};
    const GridFunction au = solve_dirichlet(
        {1.0, 1.0}, agrid,
        [&](double x, double y) { return aff.jet({x, y}).value; }, {}, &astats);
    double aworst = 0.0;
    for (int j = 0; j < 17; ++j) {
        for (int i = 0; i < 17; ++i) {
            aworst = std::max(aworst,
                              std::abs(au.at(i, j) -
                                       aff.jet({agrid.x(i), agrid.y(j)}).value));
        }
    }
    pass = pass && astats.iterations <= 2 && aworst <= 1e-12;

    report(10, "solver convergence", pass,
           iter_note + " <= 20" + ratio_note + ", affine error " + fmt(aworst) +
               " <= 1e-12");
}

} // namespace

int main() {
    criterion_catalog();
    criterion_form_identities();
    criterion_p_bridge();
    criterion_variational();
    criterion_nitsche();
    criterion_construction();
    criterion_scaling();
    criterion_holomorphic();
    criterion_knowledge();
    criterion_solver();

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
