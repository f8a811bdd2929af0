#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "bernstein/fields.hpp"
#include "bernstein/operators.hpp"

namespace bernstein {

/// The three parameter families for which a density F(w) is defined.
enum class DensityCase {
    power,       // (gamma > 1, eps > 0) or (gamma <= -1, eps < 0)
    exponential, // gamma = 1, eps > 0
    p_power,     // eps = 0, |gamma| > 1
};

const std::string& to_string(DensityCase c);

/// Variational density F with exact first and second derivatives:
///   power:       F(w) = (2|eps| + |gamma-1| w)^(gamma/(gamma-1))
///   exponential: F(w) = e^(w / (2 eps))
///   p-power:     F(w) = (|gamma-1| w)^(gamma/(gamma-1)) = c(p)/p * w^(p/2)
class VariationalDensity {
public:
    /// Throws InadmissibleParamsError outside the three families.
    explicit VariationalDensity(OperatorParams params);

    OperatorParams params() const { return params_; }
    DensityCase density_case() const { return case_; }

    /// gamma/(gamma-1); meaningless for the exponential case
    double exponent() const { return exponent_; }
    /// normalizer of the p-power form, c(p) = p |gamma-1|^(gamma/(gamma-1))
    double p_normalizer() const;

    double value(double w) const;
    double first(double w) const;
    double second(double w) const;

private:
    OperatorParams params_;
    DensityCase case_;
    double exponent_ = 0.0;
};

inline VariationalDensity density(OperatorParams params) {
    return VariationalDensity(params);
}

/// True iff params lie in one of the three density families.
bool density_admissible(OperatorParams params);

/// lambda(w) = 2 F''(w)/F'(w) = 2 / (2 eps + (gamma-1) w).
/// Throws PoleError when the denominator vanishes.
double lambda_value(OperatorParams params, double w);

/// The Nitsche integrand (1 + w lambda)/(2 + w lambda) * 1/w, evaluated
/// through lambda exactly as displayed. Throws PoleError when a
/// denominator vanishes.
double nitsche_integrand(OperatorParams params, double w);

/// The same integrand as the partial-fraction form
/// (1/2) (1/(2 eps + gamma w) + 1/w); removable lambda poles are gone.
double nitsche_integrand_reduced(OperatorParams params, double w);

/// Antiderivative of the reduced integrand:
///   (1/2) ((1/gamma) ln|2 eps + gamma w| + ln w)      for gamma != 0,
///   w/(4 eps) + (1/2) ln w                            for gamma = 0.
double nitsche_antiderivative(OperatorParams params, double w);

enum class NitscheVerdict { diverges, converges, inconclusive };
enum class BernsteinConclusion { no_bernstein_property, criterion_silent };

const std::string& to_string(NitscheVerdict v);
const std::string& to_string(BernsteinConclusion c);

/// cutoffs of the reported partial integrals over [1, W]
inline constexpr double kNitscheCutoffs[] = {1e1, 1e2, 1e3, 1e4};
/// last/first partial-integral growth ratio expected of a divergent tail
inline constexpr double kDivergenceGrowthRatio = 2.0;

struct NitscheReport {
    OperatorParams params;
    NitscheVerdict verdict = NitscheVerdict::inconclusive;
    /// lim_{w->inf} w * integrand = (gamma+1)/(2 gamma), in closed form
    double tail_coefficient = 0.0;
    /// (cutoff W, integral over [1, W]) pairs, adaptive quadrature
    std::vector<std::pair<double, double>> partial_integrals;
    /// the criterion speaks only for the regular (eps != 0) families
    bool criterion_applicable = false;
    BernsteinConclusion bernstein_conclusion =
        BernsteinConclusion::criterion_silent;
    /// growth of the last decade divided by ln 10; approximates the tail
    /// coefficient for divergent integrals
    double last_decade_slope = 0.0;
};

/// Symbolic divergence decision with quadrature corroboration.
/// Throws InadmissibleParamsError outside the density families.
NitscheReport nitsche_verdict(OperatorParams params);

/// Euler-Lagrange residual 2 F'(w) Lap(u) + 4 F''(w) <D2u Du, Du>,
/// the expanded divergence of 2 F'(|Du|^2) Du.
double el_residual(OperatorParams params, const Jet2& jet);

/// Exponent of the associated p-Laplace equation; +infinity for gamma = 1.
/// Carries the substitution as the exact rational 2 gamma / (gamma - 1),
/// so that inverting it reproduces gamma without rounding (p itself, e.g.
/// 4/3 at gamma = -2, need not be representable).
struct PExponent {
    double value = 0.0;
    double num = 0.0; // 2 gamma
    double den = 0.0; // gamma - 1; zero when constructed from a bare p
    bool is_infinite() const { return std::isinf(value); }
};

/// p = 2 gamma/(gamma - 1); gamma = 1 maps to p = +infinity.
PExponent p_from_gamma(double gamma);

/// gamma = p/(p - 2). Throws InadmissibleParamsError for p = 2 (the
/// preimage escapes to infinity).
double gamma_from_p(double p);
/// Exact inversion through the rational carrier: gamma = num/(num - 2 den).
double gamma_from_p(const PExponent& p);

} // namespace bernstein
