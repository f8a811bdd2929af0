#include "bernstein/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace bernstein {

namespace {

void require_finite(Point2 p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw EvaluationError("field evaluation at non-finite point");
    }
}

class AffineField final : public FieldImpl {
public:
    AffineField(double a, double b, double c) : a_(a), b_(b), c_(c) {}
    Jet2 jet(Point2 p) const override {
        Jet2 j;
        j.value = a_ * p.x + b_ * p.y + c_;
        j.ux = a_;
        j.uy = b_;
        return j;
    }
    std::string describe() const override {
        return "affine(" + std::to_string(a_) + "," + std::to_string(b_) + "," +
               std::to_string(c_) + ")";
    }

private:
    double a_, b_, c_;
};

class QuadraticSumField final : public FieldImpl {
public:
    Jet2 jet(Point2 p) const override {
        Jet2 j;
        j.value = p.x * p.x + p.y * p.y;
        j.ux = 2.0 * p.x;
        j.uy = 2.0 * p.y;
        j.uxx = 2.0;
        j.uyy = 2.0;
        return j;
    }
    std::string describe() const override { return "x^2+y^2"; }
};

class ExpSumField final : public FieldImpl {
public:
    explicit ExpSumField(double bound) : bound_(bound) {}
    Jet2 jet(Point2 p) const override {
        const double s = p.x + p.y;
        if (std::abs(s) > bound_) {
            throw EvaluationError("exp-sum evaluated outside |x+y| <= " +
                                  std::to_string(bound_));
        }
        const double e = std::exp(s);
        Jet2 j;
        j.value = e;
        j.ux = e;
        j.uy = e;
        j.uxx = e;
        j.uxy = e;
        j.uyy = e;
        return j;
    }
    std::string describe() const override { return "e^{x+y}"; }

private:
    double bound_;
};

class UnivariateGField final : public FieldImpl {
public:
    UnivariateGField(ScalarField2::Scalar1D g, ScalarField2::Scalar1D dg,
                     ScalarField2::Scalar1D ddg, std::string label)
        : g_(std::move(g)), dg_(std::move(dg)), ddg_(std::move(ddg)),
          label_(std::move(label)) {}
    Jet2 jet(Point2 p) const override {
        Jet2 j;
        j.value = g_(p.x);
        j.ux = dg_(p.x);
        j.uxx = ddg_(p.x);
        return j;
    }
    std::string describe() const override { return label_; }

private:
    ScalarField2::Scalar1D g_, dg_, ddg_;
    std::string label_;
};

class XPlusHField final : public FieldImpl {
public:
    XPlusHField(ScalarField2::Scalar1D h, ScalarField2::Scalar1D dh,
                ScalarField2::Scalar1D ddh, std::string label)
        : h_(std::move(h)), dh_(std::move(dh)), ddh_(std::move(ddh)),
          label_(std::move(label)) {}
    Jet2 jet(Point2 p) const override {
        Jet2 j;
        j.value = p.x + h_(p.y);
        j.ux = 1.0;
        j.uy = dh_(p.y);
        j.uyy = ddh_(p.y);
        return j;
    }
    std::string describe() const override { return label_; }

private:
    ScalarField2::Scalar1D h_, dh_, ddh_;
    std::string label_;
};

class ScaledField final : public FieldImpl {
public:
    ScaledField(ScalarField2 inner, double a, double b)
        : inner_(std::move(inner)), a_(a), b_(b) {}
    Jet2 jet(Point2 p) const override {
        const Jet2 j = inner_.jet({b_ * p.x, b_ * p.y});
        const double ab = a_ * b_;
        const double ab2 = a_ * b_ * b_;
        Jet2 out;
        out.value = a_ * j.value;
        out.ux = ab * j.ux;
        out.uy = ab * j.uy;
        out.uxx = ab2 * j.uxx;
        out.uxy = ab2 * j.uxy;
        out.uyy = ab2 * j.uyy;
        return out;
    }
    std::string describe() const override {
        return "scaled(" + inner_.describe() + ",a=" + std::to_string(a_) +
               ",b=" + std::to_string(b_) + ")";
    }

private:
    ScalarField2 inner_;
    double a_, b_;
};

class CustomField final : public FieldImpl {
public:
    CustomField(ScalarField2::JetProvider provider, std::string label)
        : provider_(std::move(provider)), label_(std::move(label)) {}
    Jet2 jet(Point2 p) const override { return provider_(p); }
    std::string describe() const override { return label_; }

private:
    ScalarField2::JetProvider provider_;
    std::string label_;
};

} // namespace

JetN::JetN(std::size_t n) : n_(n), grad_(n, 0.0), hess_(n * n, 0.0) {
    if (n < 1) throw std::invalid_argument("JetN requires n >= 1");
}

ScalarField2 ScalarField2::affine(double a, double b, double c) {
    return ScalarField2(std::make_shared<AffineField>(a, b, c));
}

ScalarField2 ScalarField2::quadratic_sum() {
    return ScalarField2(std::make_shared<QuadraticSumField>());
}

ScalarField2 ScalarField2::exp_sum(double bound) {
    return ScalarField2(std::make_shared<ExpSumField>(bound));
}

ScalarField2 ScalarField2::univariate_g(Scalar1D g, Scalar1D dg, Scalar1D ddg,
                                        std::string label) {
    return ScalarField2(std::make_shared<UnivariateGField>(
        std::move(g), std::move(dg), std::move(ddg), std::move(label)));
}

ScalarField2 ScalarField2::x_plus_h(Scalar1D h, Scalar1D dh, Scalar1D ddh,
                                    std::string label) {
    return ScalarField2(std::make_shared<XPlusHField>(
        std::move(h), std::move(dh), std::move(ddh), std::move(label)));
}

ScalarField2 ScalarField2::scaled(ScalarField2 inner, double a, double b) {
    return ScalarField2(std::make_shared<ScaledField>(std::move(inner), a, b));
}

ScalarField2 ScalarField2::custom(JetProvider provider, std::string label) {
    return ScalarField2(
        std::make_shared<CustomField>(std::move(provider), std::move(label)));
}

Jet2 ScalarField2::jet(Point2 p) const {
    require_finite(p);
    return impl_->jet(p);
}

Jet2 fd_jet(const ScalarField2& field, Point2 p, double h, double min_step) {
    if (!(h > 0.0)) throw StepSizeError("fd_jet requires h > 0");
    if (h < min_step) {
        throw StepSizeError("fd_jet step " + std::to_string(h) +
                            " below cancellation floor " +
                            std::to_string(min_step));
    }
    require_finite(p);
    const auto val = [&](double x, double y) { return field.jet({x, y}).value; };

    const double c = val(p.x, p.y);
    const double xp = val(p.x + h, p.y), xm = val(p.x - h, p.y);
    const double yp = val(p.x, p.y + h), ym = val(p.x, p.y - h);
    const double pp = val(p.x + h, p.y + h), pm = val(p.x + h, p.y - h);
    const double mp = val(p.x - h, p.y + h), mm = val(p.x - h, p.y - h);

    Jet2 j;
    j.value = c;
    j.ux = (xp - xm) / (2.0 * h);
    j.uy = (yp - ym) / (2.0 * h);
    j.uxx = (xp - 2.0 * c + xm) / (h * h);
    j.uyy = (yp - 2.0 * c + ym) / (h * h);
    j.uxy = (pp - pm - mp + mm) / (4.0 * h * h);
    return j;
}

namespace {

const std::vector<std::pair<SolutionId, std::string>> kIdNames = {
    {SolutionId::affine, "affine"},
    {SolutionId::quadratic_sum, "quadratic-sum"},
    {SolutionId::exp_sum, "exp-sum"},
    {SolutionId::univariate_g, "univariate-g"},
    {SolutionId::x_plus_h, "x-plus-h"},
};

} // namespace

const std::string& to_string(SolutionId id) {
    for (const auto& [sid, name] : kIdNames) {
        if (sid == id) return name;
    }
    throw UnknownIdError("unknown solution id");
}

SolutionId solution_id_from_string(const std::string& name) {
    for (const auto& [sid, sname] : kIdNames) {
        if (sname == name) return sid;
    }
    throw UnknownIdError("unknown solution id '" + name + "'");
}

CatalogEntry catalog(SolutionId id) {
    switch (id) {
    case SolutionId::affine:
        // Affine solves L for every (gamma, epsilon); the minimal surface
        // parameters are kept as the representative pair.
        return {id, ScalarField2::affine(2.0, 3.0, -1.0), -1.0, -1.0};
    case SolutionId::quadratic_sum:
        return {id, ScalarField2::quadratic_sum(), 0.0, 0.0};
    case SolutionId::exp_sum:
        return {id, ScalarField2::exp_sum(), -1.0, 0.0};
    case SolutionId::univariate_g:
        return {id,
                ScalarField2::univariate_g(
                    [](double x) { return std::sin(x); },
                    [](double x) { return std::cos(x); },
                    [](double x) { return -std::sin(x); }, "g(x)=sin x"),
                -1.0, 0.0};
    case SolutionId::x_plus_h:
        return {id,
                ScalarField2::x_plus_h(
                    [](double y) { return y * y * y; },
                    [](double y) { return 3.0 * y * y; },
                    [](double y) { return 6.0 * y; }, "x+y^3"),
                -1.0, 1.0};
    }
    throw UnknownIdError("unknown solution id");
}

CatalogEntry catalog(const std::string& id) {
    return catalog(solution_id_from_string(id));
}

std::vector<CatalogEntry> catalog_all() {
    std::vector<CatalogEntry> out;
    for (const auto& [sid, name] : kIdNames) out.push_back(catalog(sid));
    return out;
}

} // namespace bernstein
