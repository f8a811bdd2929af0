#include "bernstein/constructions.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "bernstein/quadrature.hpp"

namespace bernstein {

SeparableODE::SeparableODE(OperatorParams params) : params_(params) {
    splits_ = params.gamma == 1.0 && params.epsilon == 1.0;
    if (params.gamma == -1.0 && params.epsilon > 0.0) {
        degenerate_gprime_ = std::sqrt(params.epsilon);
    }
}

double SeparableODE::coef_g(double gp, double hp) const {
    const double g = params_.gamma, e = params_.epsilon;
    return 2.0 * e + (g + 1.0) * (gp * gp) + (g - 1.0) * (hp * hp);
}

double SeparableODE::coef_h(double gp, double hp) const {
    const double g = params_.gamma, e = params_.epsilon;
    return 2.0 * e + (g - 1.0) * (gp * gp) + (g + 1.0) * (hp * hp);
}

double SeparableODE::evaluate(double gp, double gpp, double hp,
                              double hpp) const {
    return coef_g(gp, hp) * gpp + coef_h(gp, hp) * hpp;
}

namespace {

// Unique real root of t + t^3/3 = s: hyperbolic closed form with a Newton
// polish (phi' = 1 + t^2 >= 1, so the polish is well conditioned).
double monotone_cubic_root(double s) {
    double t = 2.0 * std::sinh(std::asinh(1.5 * s) / 3.0);
    for (int i = 0; i < 2; ++i) {
        const double phi = t + t * t * t / 3.0 - s;
        t -= phi / (1.0 + t * t);
    }
    return t;
}

constexpr double kAnchorRange = 64.0; // unit-spaced quadrature anchors

} // namespace

SeparableComponent::SeparableComponent(double c)
    : c_(c), anchor_origin_(-kAnchorRange) {
    const int n = static_cast<int>(2.0 * kAnchorRange) + 1;
    anchors_.assign(n, 0.0);
    if (c_ == 0.0) return; // deriv is identically zero
    const int mid = n / 2;
    const auto dg = [this](double x) { return deriv(x); };
    for (int i = mid; i + 1 < n; ++i) {
        const double x0 = anchor_origin_ + i, x1 = x0 + 1.0;
        anchors_[i + 1] = anchors_[i] + adaptive_simpson(dg, x0, x1, 1e-12);
    }
    for (int i = mid; i > 0; --i) {
        const double x1 = anchor_origin_ + i, x0 = x1 - 1.0;
        anchors_[i - 1] = anchors_[i] - adaptive_simpson(dg, x0, x1, 1e-12);
    }
}

double SeparableComponent::deriv(double x) const {
    if (c_ == 0.0) return 0.0;
    return monotone_cubic_root(c_ * x);
}

double SeparableComponent::deriv2(double x) const {
    const double t = deriv(x);
    return c_ / (1.0 + t * t);
}

double SeparableComponent::integrate_from_anchor(double x) const {
    const auto dg = [this](double u) { return deriv(u); };
    const int n = static_cast<int>(anchors_.size());
    int k = static_cast<int>(std::lround(x - anchor_origin_));
    if (k < 0) k = 0;
    if (k >= n) k = n - 1;
    const double xk = anchor_origin_ + k;
    return anchors_[k] + adaptive_simpson(dg, xk, x, 1e-11);
}

double SeparableComponent::value(double x) const {
    if (c_ == 0.0) return 0.0;
    return integrate_from_anchor(x);
}

SeparableSolution::SeparableSolution(double c)
    : c_(c), g_(std::make_shared<SeparableComponent>(c)),
      h_(std::make_shared<SeparableComponent>(-c)) {}

Jet2 SeparableSolution::jet(Point2 p) const {
    Jet2 j;
    j.value = g_->value(p.x) + h_->value(p.y);
    j.ux = g_->deriv(p.x);
    j.uy = h_->deriv(p.y);
    j.uxx = g_->deriv2(p.x);
    j.uyy = h_->deriv2(p.y);
    return j;
}

ScalarField2 SeparableSolution::field() const {
    auto self = *this;
    return ScalarField2::custom(
        [self](Point2 p) { return self.jet(p); },
        "separable(c=" + std::to_string(c_) + ")");
}

ScalarField2 build_wrong_mse_solution(double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("c must be finite");
    return SeparableSolution(c).field();
}

ScalarField2 scale_field(const ScalarField2& field, ScalingParams s) {
    if (s.a == 0.0 || s.b == 0.0) {
        throw std::invalid_argument("scaling factors must be nonzero");
    }
    return ScalarField2::scaled(field, s.a, s.b);
}

ScalingParams scaling_between(double eps_from, double eps_to) {
    if (eps_from == 0.0 || eps_to == 0.0 || eps_from * eps_to < 0.0) {
        throw std::invalid_argument(
            "epsilon scaling requires nonzero values of equal sign");
    }
    return {std::sqrt(eps_to / eps_from), 1.0};
}

namespace {

const std::vector<std::pair<HolomorphicKind, std::string>> kHoloNames = {
    {HolomorphicKind::z1, "z"},
    {HolomorphicKind::z2, "z^2"},
    {HolomorphicKind::z3, "z^3"},
    {HolomorphicKind::z4, "z^4"},
    {HolomorphicKind::exp_z, "e^z"},
};

} // namespace

const std::string& to_string(HolomorphicKind k) {
    for (const auto& [kind, name] : kHoloNames) {
        if (kind == k) return name;
    }
    throw UnknownIdError("unknown holomorphic kind");
}

HolomorphicKind holomorphic_kind_from_string(const std::string& name) {
    for (const auto& [kind, kname] : kHoloNames) {
        if (kname == name) return kind;
    }
    throw UnknownIdError("unknown holomorphic kind '" + name + "'");
}

std::vector<HolomorphicKind> holomorphic_catalog() {
    std::vector<HolomorphicKind> out;
    for (const auto& [kind, name] : kHoloNames) out.push_back(kind);
    return out;
}

MapJet2 holomorphic_map(HolomorphicKind kind, Point2 p) {
    using C = std::complex<double>;
    const C z(p.x, p.y);
    C f, d1, d2;
    switch (kind) {
    case HolomorphicKind::z1:
        f = z;
        d1 = 1.0;
        d2 = 0.0;
        break;
    case HolomorphicKind::z2:
        f = z * z;
        d1 = 2.0 * z;
        d2 = 2.0;
        break;
    case HolomorphicKind::z3:
        f = z * z * z;
        d1 = 3.0 * z * z;
        d2 = 6.0 * z;
        break;
    case HolomorphicKind::z4:
        f = z * z * z * z;
        d1 = 4.0 * z * z * z;
        d2 = 12.0 * z * z;
        break;
    case HolomorphicKind::exp_z:
        f = std::exp(z);
        d1 = f;
        d2 = f;
        break;
    default:
        throw UnknownIdError("unknown holomorphic kind");
    }

    // df/dx = f', df/dy = i f', and second derivatives accordingly.
    MapJet2 m;
    m.u.value = f.real();
    m.v.value = f.imag();
    m.u.ux = d1.real();
    m.u.uy = -d1.imag();
    m.v.ux = d1.imag();
    m.v.uy = d1.real();
    m.u.uxx = d2.real();
    m.u.uxy = -d2.imag();
    m.u.uyy = -d2.real();
    m.v.uxx = d2.imag();
    m.v.uxy = d2.real();
    m.v.uyy = -d2.imag();
    return m;
}

} // namespace bernstein
