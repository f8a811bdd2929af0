#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bernstein/errors.hpp"

namespace bernstein {

/// A point of the plane.
struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Second-order jet of a scalar field at a point: value, gradient and
/// (symmetric) Hessian. The single uxy entry keeps the Hessian symmetric
/// by construction.
struct Jet2 {
    double value = 0.0;
    double ux = 0.0;
    double uy = 0.0;
    double uxx = 0.0;
    double uxy = 0.0;
    double uyy = 0.0;

    /// w = |Du|^2
    double w() const { return ux * ux + uy * uy; }
    /// trace of the Hessian
    double laplacian() const { return uxx + uyy; }
    /// <D2u Du, Du> = ux^2 uxx + 2 ux uy uxy + uy^2 uyy
    double hess_grad_grad() const {
        return ux * ux * uxx + 2.0 * ux * uy * uxy + uy * uy * uyy;
    }
};

/// Jet of a map f: R^2 -> R^2; both component jets are taken at the same
/// evaluation point.
struct MapJet2 {
    Jet2 u; // first component
    Jet2 v; // second component

    std::array<double, 2> fx() const { return {u.ux, v.ux}; }
    std::array<double, 2> fy() const { return {u.uy, v.uy}; }
    std::array<double, 2> fxx() const { return {u.uxx, v.uxx}; }
    std::array<double, 2> fxy() const { return {u.uxy, v.uxy}; }
    std::array<double, 2> fyy() const { return {u.uyy, v.uyy}; }
};

/// Gradient and symmetric Hessian in R^n (n >= 1). Symmetry is enforced
/// through the single set_hess accessor.
class JetN {
public:
    explicit JetN(std::size_t n);

    std::size_t dim() const { return n_; }

    double grad(std::size_t j) const { return grad_[j]; }
    void set_grad(std::size_t j, double v) { grad_[j] = v; }

    double hess(std::size_t j, std::size_t k) const { return hess_[j * n_ + k]; }
    void set_hess(std::size_t j, std::size_t k, double v) {
        hess_[j * n_ + k] = v;
        hess_[k * n_ + j] = v;
    }

private:
    std::size_t n_;
    std::vector<double> grad_;
    std::vector<double> hess_;
};

/// Implementation interface behind ScalarField2. Implementations must be
/// immutable after construction; jet() is called concurrently.
class FieldImpl {
public:
    virtual ~FieldImpl() = default;
    virtual Jet2 jet(Point2 p) const = 0;
    virtual std::string describe() const = 0;
};

/// A scalar field over R^2 with closed-form second-order jets.
/// Value type; cheap to copy and safe to share between threads.
class ScalarField2 {
public:
    using JetProvider = std::function<Jet2(Point2)>;
    using Scalar1D = std::function<double(double)>;

    explicit ScalarField2(std::shared_ptr<const FieldImpl> impl)
        : impl_(std::move(impl)) {}

    /// a*x + b*y + c
    static ScalarField2 affine(double a, double b, double c);
    /// x^2 + y^2
    static ScalarField2 quadratic_sum();
    /// e^{x+y}; evaluation restricted to |x+y| <= bound to avoid overflow
    static ScalarField2 exp_sum(double bound = 30.0);
    /// u(x,y) = g(x), with g' and g'' supplied by the caller
    static ScalarField2 univariate_g(Scalar1D g, Scalar1D dg, Scalar1D ddg,
                                     std::string label = "g(x)");
    /// u(x,y) = x + h(y), with h' and h'' supplied by the caller
    static ScalarField2 x_plus_h(Scalar1D h, Scalar1D dh, Scalar1D ddh,
                                 std::string label = "x+h(y)");
    /// v(x,y) = a * u(b x, b y), exact chain-rule jets
    static ScalarField2 scaled(ScalarField2 inner, double a, double b);
    /// arbitrary user-supplied jet provider
    static ScalarField2 custom(JetProvider provider, std::string label = "custom");

    /// Exact analytic jet at p. Throws EvaluationError on a non-finite
    /// point or when the descriptor's range guard rejects p.
    Jet2 jet(Point2 p) const;

    std::string describe() const { return impl_->describe(); }

private:
    std::shared_ptr<const FieldImpl> impl_;
};

inline Jet2 jet_of(const ScalarField2& field, Point2 p) { return field.jet(p); }

/// Central-difference jet built from value evaluations only; cross-check
/// oracle for the analytic jets. Throws StepSizeError when h < min_step.
Jet2 fd_jet(const ScalarField2& field, Point2 p, double h,
            double min_step = 1e-6);

/// Identifiers of the explicit entire solutions kept in the catalog.
enum class SolutionId {
    affine,
    quadratic_sum,
    exp_sum,
    univariate_g,
    x_plus_h,
};

struct OperatorParams; // defined in operators.hpp

/// A catalog entry: the field together with the (gamma, epsilon) whose
/// L-residual it annihilates identically.
struct CatalogEntry {
    SolutionId id;
    ScalarField2 field;
    double gamma;
    double epsilon;
};

/// Look up one catalog entry. Throws UnknownIdError for ids outside the
/// catalog.
CatalogEntry catalog(SolutionId id);
CatalogEntry catalog(const std::string& id);

/// All catalog entries, in a fixed order.
std::vector<CatalogEntry> catalog_all();

const std::string& to_string(SolutionId id);
SolutionId solution_id_from_string(const std::string& name);

} // namespace bernstein
