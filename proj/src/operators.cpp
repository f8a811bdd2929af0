#include "bernstein/operators.hpp"

#include <cmath>
#include <vector>

namespace bernstein {

double l_residual(OperatorParams params, const Jet2& jet) {
    const double g = params.gamma, e = params.epsilon;
    const double A = 2.0 * e + (g + 1.0) * (jet.ux * jet.ux) +
                     (g - 1.0) * (jet.uy * jet.uy);
    const double B = 4.0 * jet.ux * jet.uy;
    const double C = 2.0 * e + (g - 1.0) * (jet.ux * jet.ux) +
                     (g + 1.0) * (jet.uy * jet.uy);
    return A * jet.uxx + B * jet.uxy + C * jet.uyy;
}

double l_residual_compact(OperatorParams params, const Jet2& jet) {
    const double g = params.gamma, e = params.epsilon;
    return (2.0 * e + (g - 1.0) * jet.w()) * jet.laplacian() +
           2.0 * jet.hess_grad_grad();
}

double named_form_residual(NamedForm form, const Jet2& jet) {
    const double p = jet.ux, q = jet.uy;
    switch (form) {
    case NamedForm::minimal_surface:
        return (1.0 + q * q) * jet.uxx - 2.0 * p * q * jet.uxy +
               (1.0 + p * p) * jet.uyy;
    case NamedForm::wrong_minimal_surface:
        return (1.0 + p * p) * jet.uxx + 2.0 * p * q * jet.uxy +
               (1.0 + q * q) * jet.uyy;
    case NamedForm::maximal_surface:
        return (1.0 - q * q) * jet.uxx + 2.0 * p * q * jet.uxy +
               (1.0 - p * p) * jet.uyy;
    case NamedForm::one_laplace_form:
        return q * q * jet.uxx - 2.0 * p * q * jet.uxy + p * p * jet.uyy;
    }
    throw Error("unknown named form");
}

double p_laplace_residual(double p, const Jet2& jet) {
    const double w = jet.w();
    if (w == 0.0) {
        if (p == 2.0) return jet.laplacian();
        if (p > 2.0) return 0.0;
        throw SingularGradientError(
            "p-Laplace residual at a critical point requires p >= 2");
    }
    if (p == 2.0) return jet.laplacian();
    return std::pow(w, 0.5 * p - 1.0) *
           (jet.laplacian() + (p - 2.0) * jet.hess_grad_grad() / w);
}

double infinity_laplace_residual(const JetN& jet) {
    const std::size_t n = jet.dim();
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            sum += jet.grad(j) * jet.grad(k) * jet.hess(j, k);
        }
    }
    return sum;
}

std::array<double, 2> mss_residual(const MapJet2& mjet) {
    const auto fx = mjet.fx(), fy = mjet.fy();
    const auto fxx = mjet.fxx(), fxy = mjet.fxy(), fyy = mjet.fyy();
    const double nx2 = fx[0] * fx[0] + fx[1] * fx[1];
    const double ny2 = fy[0] * fy[0] + fy[1] * fy[1];
    const double dot = fx[0] * fy[0] + fx[1] * fy[1];
    std::array<double, 2> r;
    for (int c = 0; c < 2; ++c) {
        r[c] = (1.0 + ny2) * fxx[c] - 2.0 * dot * fxy[c] + (1.0 + nx2) * fyy[c];
    }
    return r;
}

double symbol_discriminant(OperatorParams params, double ux, double uy) {
    const double g = params.gamma, e = params.epsilon;
    const double A = 2.0 * e + (g + 1.0) * ux * ux + (g - 1.0) * uy * uy;
    const double B = 4.0 * ux * uy;
    const double C = 2.0 * e + (g - 1.0) * ux * ux + (g + 1.0) * uy * uy;
    return 4.0 * A * C - B * B;
}

EllipticityReport ellipticity(OperatorParams params) {
    EllipticityReport rep;
    rep.elliptic =
        params.epsilon * params.gamma > 0.0 && std::abs(params.gamma) >= 1.0;
    rep.rule_source = "elliptic iff epsilon*gamma > 0 and |gamma| >= 1";

    bool first = true;
    for (int i = -12; i <= 12; ++i) {
        for (int j = -12; j <= 12; ++j) {
            const double ux = 0.25 * i, uy = 0.25 * j;
            const double d = symbol_discriminant(params, ux, uy);
            if (first || d < rep.sampled_min_discriminant) {
                rep.sampled_min_discriminant = d;
                rep.min_at_ux = ux;
                rep.min_at_uy = uy;
                first = false;
            }
        }
    }
    return rep;
}

namespace {

const std::vector<std::pair<NamedForm, std::string>> kFormNames = {
    {NamedForm::minimal_surface, "minimal-surface"},
    {NamedForm::wrong_minimal_surface, "wrong-minimal-surface"},
    {NamedForm::maximal_surface, "maximal-surface"},
    {NamedForm::one_laplace_form, "one-laplace-form"},
};

} // namespace

const std::string& to_string(NamedForm form) {
    for (const auto& [f, name] : kFormNames) {
        if (f == form) return name;
    }
    throw Error("unknown named form");
}

NamedForm named_form_from_string(const std::string& name) {
    for (const auto& [f, fname] : kFormNames) {
        if (fname == name) return f;
    }
    throw UnknownIdError("unknown named form '" + name + "'");
}

} // namespace bernstein
