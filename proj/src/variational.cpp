#include "bernstein/variational.hpp"

#include <cmath>
#include <limits>

#include "bernstein/quadrature.hpp"

namespace bernstein {

namespace {

std::string params_str(OperatorParams p) {
    return "(gamma=" + std::to_string(p.gamma) +
           ", epsilon=" + std::to_string(p.epsilon) + ")";
}

} // namespace

bool density_admissible(OperatorParams p) {
    const double g = p.gamma, e = p.epsilon;
    if ((g > 1.0 && e > 0.0) || (g <= -1.0 && e < 0.0)) return true;
    if (g == 1.0 && e > 0.0) return true;
    if (e == 0.0 && std::abs(g) > 1.0) return true;
    return false;
}

VariationalDensity::VariationalDensity(OperatorParams params)
    : params_(params) {
    const double g = params.gamma, e = params.epsilon;
    if ((g > 1.0 && e > 0.0) || (g <= -1.0 && e < 0.0)) {
        case_ = DensityCase::power;
        exponent_ = g / (g - 1.0);
    } else if (g == 1.0 && e > 0.0) {
        case_ = DensityCase::exponential;
    } else if (e == 0.0 && std::abs(g) > 1.0) {
        case_ = DensityCase::p_power;
        exponent_ = g / (g - 1.0);
    } else {
        throw InadmissibleParamsError("no variational density for " +
                                      params_str(params));
    }
}

double VariationalDensity::p_normalizer() const {
    if (case_ == DensityCase::exponential) {
        throw InadmissibleParamsError(
            "no finite p-power normalizer at gamma = 1 (p is infinite)");
    }
    // c(p) with p = 2 gamma/(gamma-1); c(p)/p = |gamma-1|^(gamma/(gamma-1))
    const double g = params_.gamma;
    const double p = 2.0 * g / (g - 1.0);
    return p * std::pow(std::abs(g - 1.0), exponent_);
}

double VariationalDensity::value(double w) const {
    const double g = params_.gamma, e = params_.epsilon;
    switch (case_) {
    case DensityCase::power:
        return std::pow(2.0 * std::abs(e) + std::abs(g - 1.0) * w, exponent_);
    case DensityCase::exponential:
        return std::exp(w / (2.0 * e));
    case DensityCase::p_power:
        return std::pow(std::abs(g - 1.0) * w, exponent_);
    }
    throw Error("unreachable density case");
}

double VariationalDensity::first(double w) const {
    const double g = params_.gamma, e = params_.epsilon;
    switch (case_) {
    case DensityCase::power: {
        // d/dw (2|e| + |g-1| w)^(g/(g-1)) = sgn(g-1) g (...)^(1/(g-1))
        const double base = 2.0 * std::abs(e) + std::abs(g - 1.0) * w;
        const double sign = g > 1.0 ? 1.0 : -1.0;
        return sign * g * std::pow(base, 1.0 / (g - 1.0));
    }
    case DensityCase::exponential:
        return std::exp(w / (2.0 * e)) / (2.0 * e);
    case DensityCase::p_power: {
        const double base = std::abs(g - 1.0) * w;
        const double sign = g > 1.0 ? 1.0 : -1.0;
        return sign * g * std::pow(base, 1.0 / (g - 1.0));
    }
    }
    throw Error("unreachable density case");
}

double VariationalDensity::second(double w) const {
    const double g = params_.gamma, e = params_.epsilon;
    switch (case_) {
    case DensityCase::power: {
        const double base = 2.0 * std::abs(e) + std::abs(g - 1.0) * w;
        return g * std::pow(base, (2.0 - g) / (g - 1.0));
    }
    case DensityCase::exponential:
        return std::exp(w / (2.0 * e)) / (4.0 * e * e);
    case DensityCase::p_power: {
        const double base = std::abs(g - 1.0) * w;
        return g * std::pow(base, (2.0 - g) / (g - 1.0));
    }
    }
    throw Error("unreachable density case");
}

double lambda_value(OperatorParams params, double w) {
    const double denom = 2.0 * params.epsilon + (params.gamma - 1.0) * w;
    if (denom == 0.0) {
        throw PoleError("lambda pole at w = " + std::to_string(w) + " for " +
                        params_str(params));
    }
    return 2.0 / denom;
}

double nitsche_integrand(OperatorParams params, double w) {
    if (w == 0.0) throw PoleError("Nitsche integrand pole at w = 0");
    const double lam = lambda_value(params, w);
    const double denom = 2.0 + w * lam;
    if (denom == 0.0) {
        throw PoleError("Nitsche integrand pole at w = " + std::to_string(w));
    }
    return (1.0 + w * lam) / denom / w;
}

double nitsche_integrand_reduced(OperatorParams params, double w) {
    const double denom = 2.0 * params.epsilon + params.gamma * w;
    if (w == 0.0 || denom == 0.0) {
        throw PoleError("Nitsche integrand pole at w = " + std::to_string(w));
    }
    return 0.5 * (1.0 / denom + 1.0 / w);
}

double nitsche_antiderivative(OperatorParams params, double w) {
    const double g = params.gamma, e = params.epsilon;
    if (g == 0.0) return w / (4.0 * e) + 0.5 * std::log(w);
    return 0.5 * (std::log(std::abs(2.0 * e + g * w)) / g + std::log(w));
}

NitscheReport nitsche_verdict(OperatorParams params) {
    const VariationalDensity dens(params); // validates admissibility
    NitscheReport rep;
    rep.params = params;

    // Admissible families all have gamma != 0, so the closed-form limit
    // of w * integrand is (gamma+1)/(2 gamma); zero exactly at gamma = -1.
    // The + 0.0 turns the gamma = -1 result into a positive zero.
    rep.tail_coefficient = (params.gamma + 1.0) / (2.0 * params.gamma) + 0.0;
    rep.verdict = rep.tail_coefficient != 0.0 ? NitscheVerdict::diverges
                                              : NitscheVerdict::converges;

    for (double cutoff : kNitscheCutoffs) {
        const double val = adaptive_simpson(
            [&](double w) { return nitsche_integrand_reduced(params, w); }, 1.0,
            cutoff, 1e-9);
        rep.partial_integrals.emplace_back(cutoff, val);
    }

    const auto& parts = rep.partial_integrals;
    rep.last_decade_slope =
        (parts.back().second - parts[parts.size() - 2].second) /
        std::log(10.0);

    // The criterion presumes a regular integrand; F_{gamma,0} is singular
    // or degenerate at w = 0, so divergence alone concludes nothing there.
    rep.criterion_applicable = dens.density_case() != DensityCase::p_power;
    rep.bernstein_conclusion =
        (rep.verdict == NitscheVerdict::diverges && rep.criterion_applicable)
            ? BernsteinConclusion::no_bernstein_property
            : BernsteinConclusion::criterion_silent;
    return rep;
}

double el_residual(OperatorParams params, const Jet2& jet) {
    const VariationalDensity dens(params);
    const double w = jet.w();
    return 2.0 * dens.first(w) * jet.laplacian() +
           4.0 * dens.second(w) * jet.hess_grad_grad();
}

PExponent p_from_gamma(double gamma) {
    if (gamma == 1.0) {
        return {std::numeric_limits<double>::infinity(), 2.0, 0.0};
    }
    const double num = 2.0 * gamma, den = gamma - 1.0;
    return {num / den, num, den};
}

double gamma_from_p(double p) {
    if (std::isinf(p)) return 1.0;
    if (p == 2.0) {
        throw InadmissibleParamsError(
            "p = 2 has no finite gamma preimage (gamma escapes to infinity)");
    }
    return p / (p - 2.0);
}

double gamma_from_p(const PExponent& p) {
    if (p.den == 0.0 || !std::isfinite(p.value)) return gamma_from_p(p.value);
    const double d = p.num - 2.0 * p.den;
    if (d == 0.0) {
        throw InadmissibleParamsError(
            "p = 2 has no finite gamma preimage (gamma escapes to infinity)");
    }
    return p.num / d;
}

namespace {

const std::vector<std::pair<DensityCase, std::string>> kCaseNames = {
    {DensityCase::power, "power"},
    {DensityCase::exponential, "exponential"},
    {DensityCase::p_power, "p-power"},
};
const std::vector<std::pair<NitscheVerdict, std::string>> kVerdictNames = {
    {NitscheVerdict::diverges, "diverges"},
    {NitscheVerdict::converges, "converges"},
    {NitscheVerdict::inconclusive, "inconclusive"},
};
const std::vector<std::pair<BernsteinConclusion, std::string>> kConclNames = {
    {BernsteinConclusion::no_bernstein_property, "no-bernstein-property"},
    {BernsteinConclusion::criterion_silent, "criterion-silent"},
};

template <typename T>
const std::string& lookup(const std::vector<std::pair<T, std::string>>& table,
                          T key) {
    for (const auto& [k, name] : table) {
        if (k == key) return name;
    }
    throw Error("unknown enum value");
}

} // namespace

const std::string& to_string(DensityCase c) { return lookup(kCaseNames, c); }
const std::string& to_string(NitscheVerdict v) {
    return lookup(kVerdictNames, v);
}
const std::string& to_string(BernsteinConclusion c) {
    return lookup(kConclNames, c);
}

} // namespace bernstein
