#include "bernstein/knowledge.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

#include "bernstein/variational.hpp"

namespace bernstein {

namespace {

int sign0(double x) { return (x > 0.0) - (x < 0.0); }

// Anchors: the mathematical statements (with their classical attributions)
// that back each verdict.
constexpr const char* kAnchorBernstein =
    "Bernstein: entire C2 solutions of the minimal surface equation over "
    "R^2 are affine linear";
constexpr const char* kAnchorLowDim =
    "De Giorgi (n=3), Almgren (n=4), Simons (n<=7): entire solutions of "
    "the minimal surface equation over R^n, n<=7, are affine linear";
constexpr const char* kAnchorBdgg =
    "Bombieri-De Giorgi-Giusti: non-affine entire minimal graphs exist "
    "for n>=8";
constexpr const char* kAnchorSeparable =
    "separation ansatz u = g(x)+h(y) produces entire non-linear C2 "
    "solutions of the wrong minimal surface equation";
constexpr const char* kAnchorNitsche =
    "Nitsche criterion: the divergent Nitsche integral of the variational "
    "density yields entire non-linear C2 solutions (gamma>=1, eps>0 and "
    "gamma<-1, eps<0)";
constexpr const char* kAnchorPOpen =
    "affineness of entire C2 solutions for eps=0, |gamma|>1 (p-harmonic "
    "association, p != 2) is an open question";
constexpr const char* kAnchorAronsson =
    "Aronsson: entire C2 infinity-harmonic functions over R^2 are affine "
    "linear";
constexpr const char* kAnchorYu =
    "Yu: entire C4 infinity-harmonic functions over R^n are affine linear";
constexpr const char* kAnchorInftyOpen =
    "whether C2 regularity suffices for the infinity-Laplace equation over "
    "R^n, n>=3, is not known";
constexpr const char* kAnchorOneLaplace =
    "u = g(x) with arbitrary g in C2, and u = e^{x+y}, are entire "
    "non-linear solutions of the 1-Laplace form";
constexpr const char* kAnchorZeroZero =
    "u = x^2 + y^2 is an entire non-linear solution at (gamma, eps) = (0,0)";
constexpr const char* kAnchorMaximalFails =
    "u = x + h(y) with arbitrary h in C2 solves the maximal surface form, "
    "so non-linear entire solutions exist";
constexpr const char* kAnchorMaximalCond =
    "Calabi (n<=4), Cheng-Yau (all n): entire maximal-surface solutions "
    "with |Du| < 1 are affine linear";
constexpr const char* kAnchorHolomorphic =
    "every holomorphic map C -> C, read as a map R^2 -> R^2, solves the "
    "codimension-2 minimal surface system";
constexpr const char* kAnchorCodimLow =
    "Chern-Osserman, Fischer-Colbrie: for the minimal surface system with "
    "codimension k>1, bounded gradient implies affineness when n<=3";
constexpr const char* kAnchorLawsonOsserman =
    "Lawson-Osserman cone: bounded gradient does not imply affineness for "
    "n>=4 (non-analytic Lipschitz solution)";
constexpr const char* kAnchorIsentropic =
    "gamma=1, eps<0 arises for isentropic irrotational steady plane flows "
    "(Courant-Friedrichs); no affineness statement encoded";
constexpr const char* kAnchorNotCovered =
    "no affineness statement encoded for these parameters";

BernsteinVerdict make(BernsteinStatus status, std::string anchor,
                      std::vector<Witness> witnesses = {},
                      std::string condition = {}) {
    BernsteinVerdict v;
    v.status = status;
    v.anchor = std::move(anchor);
    v.witnesses = std::move(witnesses);
    v.condition = std::move(condition);
    return v;
}

BernsteinVerdict system_verdict(const BernsteinQuery& q) {
    // Minimal surface system, codimension > 1.
    if (q.gradient_bound.has_value()) {
        if (q.dimension <= 3) {
            return make(BernsteinStatus::conditional_holds, kAnchorCodimLow, {},
                        "|Du| bounded over R^n (codimension k>1, n<=3)");
        }
        return make(BernsteinStatus::fails, kAnchorLawsonOsserman,
                    {{WitnessKind::literature, "lawson-osserman-cone"}});
    }
    if (q.dimension == 2 && q.codimension == 2) {
        return make(BernsteinStatus::fails, kAnchorHolomorphic,
                    {{WitnessKind::construction, "holomorphic:z^2"},
                     {WitnessKind::construction, "holomorphic:e^z"}});
    }
    return make(BernsteinStatus::not_covered, kAnchorNotCovered);
}

} // namespace

BernsteinVerdict bernstein_verdict(const BernsteinQuery& q) {
    if (q.dimension < 2) throw std::invalid_argument("dimension must be >= 2");
    if (q.codimension < 1) {
        throw std::invalid_argument("codimension must be >= 1");
    }

    const double g = q.params.gamma;
    const int s = sign0(q.params.epsilon);
    const double eps = q.params.epsilon;

    if (q.codimension > 1) {
        // The system statements are tied to the minimal surface family.
        if (g == -1.0 && s == -1) return system_verdict(q);
        return make(BernsteinStatus::not_covered, kAnchorNotCovered);
    }

    // Minimal surface equation.
    if (g == -1.0 && s == -1) {
        if (q.dimension == 2) {
            return make(BernsteinStatus::holds, kAnchorBernstein);
        }
        if (q.dimension <= 7) return make(BernsteinStatus::holds, kAnchorLowDim);
        return make(BernsteinStatus::fails, kAnchorBdgg,
                    {{WitnessKind::literature, "bombieri-de-giorgi-giusti-graph"}});
    }

    // Maximal surface family.
    if (g == -1.0 && s == 1) {
        if (q.gradient_bound.has_value() && *q.gradient_bound < 1.0) {
            return make(BernsteinStatus::conditional_holds, kAnchorMaximalCond,
                        {}, "|Du| <= B < 1 over all of R^n");
        }
        if (q.dimension == 2) {
            std::vector<Witness> w{{WitnessKind::catalog_field, "x-plus-h"}};
            if (eps != 1.0) {
                w = {{WitnessKind::construction, "x-plus-h*scaling"}};
            }
            return make(BernsteinStatus::fails, kAnchorMaximalFails,
                        std::move(w));
        }
        return make(BernsteinStatus::not_covered, kAnchorNotCovered);
    }

    // 1-Laplace form.
    if (g == -1.0 && s == 0) {
        if (q.dimension == 2) {
            return make(BernsteinStatus::fails, kAnchorOneLaplace,
                        {{WitnessKind::catalog_field, "univariate-g"},
                         {WitnessKind::catalog_field, "exp-sum"}});
        }
        return make(BernsteinStatus::not_covered, kAnchorNotCovered);
    }

    // Infinity-Laplace.
    if (g == 1.0 && s == 0) {
        if (q.regularity == Regularity::c4) {
            return make(BernsteinStatus::holds, kAnchorYu);
        }
        if (q.dimension == 2) {
            return make(BernsteinStatus::holds, kAnchorAronsson);
        }
        return make(BernsteinStatus::open, kAnchorInftyOpen);
    }

    // p-harmonic association, eps = 0, |gamma| > 1.
    if (s == 0 && std::abs(g) > 1.0) {
        if (q.dimension == 2) return make(BernsteinStatus::open, kAnchorPOpen);
        return make(BernsteinStatus::not_covered, kAnchorNotCovered);
    }

    if (g == 0.0 && s == 0) {
        if (q.dimension == 2) {
            return make(BernsteinStatus::fails, kAnchorZeroZero,
                        {{WitnessKind::catalog_field, "quadratic-sum"}});
        }
        return make(BernsteinStatus::not_covered, kAnchorNotCovered);
    }

    // Elliptic no-Bernstein family: gamma >= 1 with eps > 0.
    if (s == 1 && g >= 1.0) {
        if (q.dimension != 2) {
            return make(BernsteinStatus::not_covered, kAnchorNotCovered);
        }
        std::vector<Witness> w;
        if (g == 1.0) {
            w.push_back(eps == 1.0
                            ? Witness{WitnessKind::construction, "separable:c=1"}
                            : Witness{WitnessKind::construction,
                                      "separable:c=1*scaling"});
        }
        w.push_back({WitnessKind::criterion, "nitsche-divergence"});
        return make(BernsteinStatus::fails,
                    g == 1.0 ? kAnchorSeparable : kAnchorNitsche, std::move(w));
    }

    // Elliptic no-Bernstein family: gamma < -1 with eps < 0.
    if (s == -1 && g < -1.0) {
        if (q.dimension != 2) {
            return make(BernsteinStatus::not_covered, kAnchorNotCovered);
        }
        return make(BernsteinStatus::fails, kAnchorNitsche,
                    {{WitnessKind::criterion, "nitsche-divergence"}});
    }

    if (g == 1.0 && s == -1) {
        return make(BernsteinStatus::not_covered, kAnchorIsentropic);
    }

    return make(BernsteinStatus::not_covered, kAnchorNotCovered);
}

std::pair<OperatorParams, ScalingParams> normalize_epsilon(
    OperatorParams params) {
    const double eps = params.epsilon;
    if (eps == 0.0 || eps == 1.0 || eps == -1.0) {
        return {params, ScalingParams{1.0, 1.0}};
    }
    const double s = static_cast<double>(sign0(eps));
    return {OperatorParams{params.gamma, s},
            ScalingParams{std::sqrt(std::abs(eps)), 1.0}};
}

namespace {

// max |L_residual| of a field over the standard sample grid
double grid_residual(const ScalarField2& field, OperatorParams params,
                     int per_side, double extent) {
    double worst = 0.0;
    for (int i = 0; i < per_side; ++i) {
        for (int j = 0; j < per_side; ++j) {
            const double x =
                -extent + 2.0 * extent * i / (per_side - 1);
            const double y =
                -extent + 2.0 * extent * j / (per_side - 1);
            const double r = std::abs(l_residual(params, field.jet({x, y})));
            worst = std::max(worst, r);
        }
    }
    return worst;
}

double holomorphic_grid_residual(HolomorphicKind kind, int per_side,
                                 double extent) {
    double worst = 0.0;
    for (int i = 0; i < per_side; ++i) {
        for (int j = 0; j < per_side; ++j) {
            const double x = -extent + 2.0 * extent * i / (per_side - 1);
            const double y = -extent + 2.0 * extent * j / (per_side - 1);
            const auto r = mss_residual(holomorphic_map(kind, {x, y}));
            worst = std::max({worst, std::abs(r[0]), std::abs(r[1])});
        }
    }
    return worst;
}

} // namespace

WitnessCheck verify_witness(const Witness& w, OperatorParams params,
                            double tol) {
    WitnessCheck check;
    check.witness = w;

    switch (w.kind) {
    case WitnessKind::catalog_field: {
        const CatalogEntry entry = catalog(w.id);
        check.machine_checkable = true;
        check.max_abs_residual = grid_residual(entry.field, params, 10, 3.0);
        check.pass = check.max_abs_residual <= tol;
        check.detail = "L-residual of catalog field on the sample grid";
        return check;
    }
    case WitnessKind::construction: {
        check.machine_checkable = true;
        if (w.id == "separable:c=1") {
            check.max_abs_residual =
                grid_residual(build_wrong_mse_solution(1.0), params, 10, 3.0);
        } else if (w.id == "separable:c=1*scaling") {
            const auto s = scaling_between(1.0, params.epsilon);
            check.max_abs_residual = grid_residual(
                scale_field(build_wrong_mse_solution(1.0), s), params, 10, 3.0);
        } else if (w.id == "x-plus-h*scaling") {
            const auto s = scaling_between(1.0, params.epsilon);
            check.max_abs_residual = grid_residual(
                scale_field(catalog(SolutionId::x_plus_h).field, s), params, 10,
                3.0);
        } else if (w.id.rfind("holomorphic:", 0) == 0) {
            const auto kind =
                holomorphic_kind_from_string(w.id.substr(12));
            check.max_abs_residual = holomorphic_grid_residual(kind, 10, 3.0);
        } else {
            throw UnknownIdError("unknown construction witness '" + w.id + "'");
        }
        check.pass = check.max_abs_residual <= tol;
        check.detail = "residual of the constructed solution on the sample grid";
        return check;
    }
    case WitnessKind::criterion: {
        check.machine_checkable = true;
        const auto report = nitsche_verdict(params);
        check.pass = report.verdict == NitscheVerdict::diverges;
        check.max_abs_residual = 0.0;
        check.detail = "cross-link: Nitsche integral " +
                       to_string(report.verdict) + ", tail coefficient " +
                       std::to_string(report.tail_coefficient);
        return check;
    }
    case WitnessKind::literature:
        check.machine_checkable = false;
        check.pass = true;
        check.detail = "literature counterexample, not machine-checkable here";
        return check;
    }
    throw Error("unknown witness kind");
}

std::vector<CatalogCheck> run_catalog_checks(int points_per_side,
                                             double extent, double tol) {
    std::vector<CatalogCheck> out;
    for (const CatalogEntry& entry : catalog_all()) {
        CatalogCheck c;
        c.id = entry.id;
        c.params = {entry.gamma, entry.epsilon};
        c.points = points_per_side * points_per_side;
        c.max_abs_residual =
            grid_residual(entry.field, c.params, points_per_side, extent);
        c.pass = c.max_abs_residual <= tol;
        out.push_back(c);
    }
    return out;
}

std::string knowledge_table_json() {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    const double gammas[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
    const double epsilons[] = {-1.0, 0.0, 1.0};
    const int dims[] = {2, 5, 8};
    const Regularity regs[] = {Regularity::c2, Regularity::c4};
    for (double g : gammas) {
        for (double e : epsilons) {
            for (int n : dims) {
                for (Regularity r : regs) {
                    BernsteinQuery q;
                    q.params = {g, e};
                    q.dimension = n;
                    q.regularity = r;
                    const BernsteinVerdict v = bernstein_verdict(q);
                    nlohmann::ordered_json row;
                    row["gamma"] = g;
                    row["epsilon"] = e;
                    row["dim"] = n;
                    row["regularity"] = to_string(r);
                    row["status"] = to_string(v.status);
                    row["anchor"] = v.anchor;
                    auto witnesses = nlohmann::ordered_json::array();
                    for (const Witness& w : v.witnesses) {
                        witnesses.push_back(
                            {{"kind", to_string(w.kind)}, {"id", w.id}});
                    }
                    row["witnesses"] = witnesses;
                    rows.push_back(row);
                }
            }
        }
    }
    return rows.dump();
}

namespace {

const std::vector<std::pair<Regularity, std::string>> kRegNames = {
    {Regularity::c2, "c2"},
    {Regularity::c4, "c4"},
};
const std::vector<std::pair<BernsteinStatus, std::string>> kStatusNames = {
    {BernsteinStatus::holds, "holds"},
    {BernsteinStatus::fails, "fails"},
    {BernsteinStatus::conditional_holds, "conditional-holds"},
    {BernsteinStatus::open, "open"},
    {BernsteinStatus::not_covered, "not-covered"},
};
const std::vector<std::pair<WitnessKind, std::string>> kWitnessKindNames = {
    {WitnessKind::catalog_field, "catalog"},
    {WitnessKind::construction, "construction"},
    {WitnessKind::criterion, "criterion"},
    {WitnessKind::literature, "literature"},
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

const std::string& to_string(Regularity r) { return lookup(kRegNames, r); }
const std::string& to_string(BernsteinStatus s) {
    return lookup(kStatusNames, s);
}
const std::string& to_string(WitnessKind k) {
    return lookup(kWitnessKindNames, k);
}

Regularity regularity_from_string(const std::string& name) {
    for (const auto& [r, rname] : kRegNames) {
        if (rname == name) return r;
    }
    throw UnknownIdError("unknown regularity '" + name + "'");
}

} // namespace bernstein
