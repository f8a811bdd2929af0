#pragma once

#include <array>
#include <string>

#include "bernstein/fields.hpp"

namespace bernstein {

/// The pair (gamma, epsilon) indexing the operator family
///   L[u] = (2e + (g+1) ux^2 + (g-1) uy^2) uxx + 4 ux uy uxy
///        + (2e + (g-1) ux^2 + (g+1) uy^2) uyy.
struct OperatorParams {
    double gamma = 0.0;
    double epsilon = 0.0;
};

/// The four named 2D equations, each as the literal displayed form.
enum class NamedForm {
    minimal_surface,       // (1+uy^2) uxx - 2 ux uy uxy + (1+ux^2) uyy
    wrong_minimal_surface, // (1+ux^2) uxx + 2 ux uy uxy + (1+uy^2) uyy
    maximal_surface,       // (1-uy^2) uxx + 2 ux uy uxy + (1-ux^2) uyy
    one_laplace_form,      // uy^2 uxx - 2 ux uy uxy + ux^2 uyy
};

const std::string& to_string(NamedForm form);
NamedForm named_form_from_string(const std::string& name);

/// Pointwise residual of L in the displayed sign and scaling (no leading-
/// coefficient normalization), so the named-form identities stay literal.
double l_residual(OperatorParams params, const Jet2& jet);

/// Same operator regrouped as (2e + (g-1) w) Lap(u) + 2 <D2u Du, Du>.
/// Agreement with l_residual is a tested property.
double l_residual_compact(OperatorParams params, const Jet2& jet);

double named_form_residual(NamedForm form, const Jet2& jet);

/// |Du|^{p-2} (Lap(u) + (p-2) <D2u Du,Du>/|Du|^2).
/// At Du = 0: returns 0 for p > 2, Lap(u) for p = 2, and throws
/// SingularGradientError for p < 2.
double p_laplace_residual(double p, const Jet2& jet);

/// sum_{j,k} u_{x_j} u_{x_k} u_{x_j x_k} over R^n.
double infinity_laplace_residual(const JetN& jet);

/// The two components of (1+|f_y|^2) f_xx - 2 (f_x . f_y) f_xy + (1+|f_x|^2) f_yy.
std::array<double, 2> mss_residual(const MapJet2& mjet);

/// Symbol-type classification of L at params.
struct EllipticityReport {
    bool elliptic = false;
    /// the analytic rule applied for the flag
    std::string rule_source;
    /// min over the gradient sample lattice of 4AC - B^2
    double sampled_min_discriminant = 0.0;
    /// gradient at which the minimum was attained
    double min_at_ux = 0.0;
    double min_at_uy = 0.0;
};

/// 4AC - B^2 for the principal part A uxx + B uxy + C uyy at one gradient.
double symbol_discriminant(OperatorParams params, double ux, double uy);

/// Analytic rule (elliptic iff eps*gamma > 0 and |gamma| >= 1) together
/// with the discriminant minimum over the gradient lattice
/// (ux, uy) in {-3,...,3}^2, step 0.25.
EllipticityReport ellipticity(OperatorParams params);

} // namespace bernstein
