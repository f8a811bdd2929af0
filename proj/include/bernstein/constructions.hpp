#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bernstein/fields.hpp"
#include "bernstein/operators.hpp"

namespace bernstein {

/// Reduction of L[u] = 0 under the ansatz u(x,y) = g(x) + h(y):
///   (2e + (g+1) g'^2 + (g-1) h'^2) g'' + (2e + (g-1) g'^2 + (g+1) h'^2) h'' = 0.
class SeparableODE {
public:
    explicit SeparableODE(OperatorParams params);

    OperatorParams params() const { return params_; }

    /// coefficient of g'' in the reduced identity
    double coef_g(double gp, double hp) const;
    /// coefficient of h''
    double coef_h(double gp, double hp) const;
    /// the reduced form at (g', g'', h', h'')
    double evaluate(double gp, double gpp, double hp, double hpp) const;

    /// True when the equation separates with a constant; the split form for
    /// gamma = eps = 1 is (1 + g'^2) g'' = c, (1 + h'^2) h'' = -c.
    bool splits() const { return splits_; }

    /// For gamma = -1, eps > 0 the h'' coefficient 2 eps - 2 g'^2 vanishes
    /// at g' = +-sqrt(eps), recovering the u = sqrt(eps) x + h(y) family;
    /// holds the critical slope when present.
    std::optional<double> degenerate_gprime() const { return degenerate_gprime_; }

private:
    OperatorParams params_;
    bool splits_ = false;
    std::optional<double> degenerate_gprime_;
};

inline SeparableODE reduce_separable(OperatorParams params) {
    return SeparableODE(params);
}

/// One separated component: the entire solution of (1 + g'^2) g'' = c with
/// g(0) = 0, g'(0) = 0. g' is the unique real root of t + t^3/3 = c x
/// (monotone cubic, hyperbolic closed form plus a Newton polish); g'' is
/// c/(1 + g'^2); g itself comes from cached adaptive quadrature of g'.
class SeparableComponent {
public:
    explicit SeparableComponent(double c);

    double c() const { return c_; }
    double value(double x) const;
    double deriv(double x) const;
    double deriv2(double x) const;

private:
    double c_;
    // cumulative integrals of deriv() at unit-spaced anchors, prebuilt so
    // value() stays read-only afterwards
    std::vector<double> anchors_;
    double anchor_origin_ = 0.0;

    double integrate_from_anchor(double x) const;
};

/// The separable solution u(x,y) = g(x) + h(y) of the wrong minimal
/// surface equation; h is the component with constant -c. Non-linear
/// exactly when c != 0.
class SeparableSolution {
public:
    explicit SeparableSolution(double c);

    double c() const { return c_; }
    const SeparableComponent& g() const { return *g_; }
    const SeparableComponent& h() const { return *h_; }

    Jet2 jet(Point2 p) const;
    /// the solution as a ScalarField2 (separable-tabulated descriptor)
    ScalarField2 field() const;

private:
    double c_;
    std::shared_ptr<const SeparableComponent> g_;
    std::shared_ptr<const SeparableComponent> h_;
};

/// Entire solution of the wrong minimal surface equation (equivalently of
/// L_{1,1}[u] = 0) with separation constant c.
ScalarField2 build_wrong_mse_solution(double c);

/// Amplitude/coordinate scaling v(x,y) = a u(bx, by).
struct ScalingParams {
    double a = 1.0;
    double b = 1.0;
};

/// Exact chain-rule scaling; satisfies
///   L_{g,e}[a u(b .)](x,y) = a^3 b^4 L_{g, e/(a^2 b^2)}[u](bx, by).
/// Throws on a = 0 or b = 0.
ScalarField2 scale_field(const ScalarField2& field, ScalingParams s);

/// Scaling that carries solutions of L_{g, eps_from} = 0 into solutions of
/// L_{g, eps_to} = 0: a^2 b^2 = eps_to/eps_from (b = 1 chosen).
ScalingParams scaling_between(double eps_from, double eps_to);

/// Holomorphic maps z^n (n in {1,..,4}) and e^z as R^2 -> R^2 jets; each
/// solves the 2D codimension-2 minimal surface system.
enum class HolomorphicKind { z1, z2, z3, z4, exp_z };

const std::string& to_string(HolomorphicKind k);
HolomorphicKind holomorphic_kind_from_string(const std::string& name);
std::vector<HolomorphicKind> holomorphic_catalog();

MapJet2 holomorphic_map(HolomorphicKind kind, Point2 p);

} // namespace bernstein
