#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bernstein/constructions.hpp"
#include "bernstein/fields.hpp"
#include "bernstein/operators.hpp"

namespace bernstein {

enum class Regularity { c2, c4 };
enum class BernsteinStatus { holds, fails, conditional_holds, open, not_covered };

const std::string& to_string(Regularity r);
const std::string& to_string(BernsteinStatus s);
Regularity regularity_from_string(const std::string& name);

/// A query against the affineness knowledge base.
struct BernsteinQuery {
    OperatorParams params;
    int dimension = 2;
    Regularity regularity = Regularity::c2;
    /// bound on |Du| over the whole space, when the hypothesis is made
    std::optional<double> gradient_bound;
    int codimension = 1;
};

enum class WitnessKind {
    catalog_field, // id resolvable through catalog()
    construction,  // built by the constructions module
    criterion,     // existence via the divergence criterion
    literature,    // classical counterexample, not machine-checkable here
};

const std::string& to_string(WitnessKind k);

struct Witness {
    WitnessKind kind;
    std::string id;
};

/// The verdict for one query. A fails status always carries at least one
/// witness; conditional-holds carries the hypothesis text.
struct BernsteinVerdict {
    BernsteinStatus status = BernsteinStatus::not_covered;
    std::vector<Witness> witnesses;
    std::string condition;
    std::string anchor;
};

/// Dispatch a query against the encoded statements. Regions with no
/// encoded statement return not-covered. Throws std::invalid_argument for
/// dimension < 2 or codimension < 1.
BernsteinVerdict bernstein_verdict(const BernsteinQuery& q);

/// (gamma, eps) -> ((gamma, sgn eps), scaling with a^2 b^2 = |eps|);
/// scale_field with the returned factors maps solutions of the normalized
/// problem onto solutions of the original one. Identity for eps in
/// {-1, 0, 1}.
std::pair<OperatorParams, ScalingParams> normalize_epsilon(OperatorParams params);

/// Result of machine-checking one witness at given parameters.
struct WitnessCheck {
    Witness witness;
    bool machine_checkable = false;
    double max_abs_residual = 0.0;
    bool pass = false;
    std::string detail;
};

/// Runs the residual (or criterion) check behind a witness. Literature
/// witnesses are reported as not machine-checkable and pass vacuously.
WitnessCheck verify_witness(const Witness& w, OperatorParams params,
                            double tol = 1e-8);

/// One catalog (field, params) residual sweep on the standard sample grid.
struct CatalogCheck {
    SolutionId id;
    OperatorParams params;
    int points = 0;
    double max_abs_residual = 0.0;
    bool pass = false;
};

/// Residual suite over the whole catalog: points_per_side^2 sample points
/// spanning [-extent, extent]^2.
std::vector<CatalogCheck> run_catalog_checks(int points_per_side = 10,
                                             double extent = 3.0,
                                             double tol = 1e-10);

/// The knowledge table serialized as a JSON array of
/// {gamma, epsilon, dim, regularity, status, anchor, witnesses}.
std::string knowledge_table_json();

} // namespace bernstein
