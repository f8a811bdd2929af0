#include "bernstein/cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bernstein/constructions.hpp"
#include "bernstein/fields.hpp"
#include "bernstein/knowledge.hpp"
#include "bernstein/operators.hpp"
#include "bernstein/solver.hpp"
#include "bernstein/variational.hpp"

namespace bernstein::cli {

namespace {

using nlohmann::ordered_json;

GridSpec parse_grid_spec(const std::string& spec) {
    std::istringstream ss(spec);
    std::string tok;
    double fields[6];
    for (double& f : fields) {
        if (!std::getline(ss, tok, ',')) {
            throw CLI::ValidationError("--grid",
                                       "expected x0,x1,y0,y1,nx,ny");
        }
        f = std::stod(tok);
    }
    if (std::getline(ss, tok, ',')) {
        throw CLI::ValidationError("--grid", "expected exactly six fields");
    }
    GridSpec g;
    g.x0 = fields[0];
    g.x1 = fields[1];
    g.y0 = fields[2];
    g.y1 = fields[3];
    g.nx = static_cast<int>(fields[4]);
    g.ny = static_cast<int>(fields[5]);
    g.validate();
    return g;
}

ordered_json grid_json(const GridSpec& g) {
    return {{"x0", g.x0}, {"x1", g.x1}, {"y0", g.y0},
            {"y1", g.y1}, {"nx", g.nx}, {"ny", g.ny}};
}

ordered_json ellipticity_json(OperatorParams params) {
    const EllipticityReport rep = ellipticity(params);
    return {{"elliptic", rep.elliptic},
            {"rule", rep.rule_source},
            {"sampled_min_discriminant", rep.sampled_min_discriminant},
            {"min_at_gradient", {rep.min_at_ux, rep.min_at_uy}}};
}

ordered_json nitsche_json(OperatorParams params) {
    if (!density_admissible(params)) {
        return {{"admissible", false},
                {"reason", "no variational density for these parameters"}};
    }
    const NitscheReport rep = nitsche_verdict(params);
    ordered_json partials = ordered_json::array();
    for (const auto& [cutoff, value] : rep.partial_integrals) {
        partials.push_back({{"cutoff", cutoff}, {"value", value}});
    }
    return {{"admissible", true},
            {"verdict", to_string(rep.verdict)},
            {"tail_coefficient", rep.tail_coefficient},
            {"criterion_applicable", rep.criterion_applicable},
            {"bernstein_conclusion", to_string(rep.bernstein_conclusion)},
            {"last_decade_slope", rep.last_decade_slope},
            {"partial_integrals", partials}};
}

ordered_json verdict_json(const BernsteinVerdict& v) {
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : v.witnesses) {
        witnesses.push_back({{"kind", to_string(w.kind)}, {"id", w.id}});
    }
    ordered_json out = {{"status", to_string(v.status)},
                        {"anchor", v.anchor},
                        {"witnesses", witnesses}};
    if (!v.condition.empty()) out["condition"] = v.condition;
    return out;
}

/// Resolves a --boundary argument: a catalog id, "separable:C", or falls
/// back to treating the string as a CSV path.
struct BoundarySource {
    ScalarField2 field;
    std::string label;
    std::optional<GridFunction> file_grid;
};

BoundarySource resolve_boundary(const std::string& arg) {
    if (arg.rfind("separable:", 0) == 0) {
        const double c = std::stod(arg.substr(10));
        return {build_wrong_mse_solution(c), arg, std::nullopt};
    }
    try {
        const CatalogEntry entry = catalog(arg);
        return {entry.field, arg, std::nullopt};
    } catch (const UnknownIdError&) {
        // not a catalog id; try a CSV file
    }
    if (!std::filesystem::exists(arg)) {
        throw UnknownIdError("--boundary '" + arg +
                             "' is neither a known id nor a file");
    }
    GridFunction gf = read_csv_file(arg);
    // Boundary values come from the file's boundary ring; the field is a
    // placeholder that must never be evaluated off the ring.
    auto grid = gf.grid;
    auto values = gf.values;
    ScalarField2 field = ScalarField2::custom(
        [grid, values](Point2 p) -> Jet2 {
            const double hx = grid.hx(), hy = grid.hy();
            const int i = static_cast<int>(std::lround((p.x - grid.x0) / hx));
            const int j = static_cast<int>(std::lround((p.y - grid.y0) / hy));
            if (i < 0 || i >= grid.nx || j < 0 || j >= grid.ny ||
                std::abs(grid.x(i) - p.x) > 1e-9 * (1.0 + std::abs(p.x)) ||
                std::abs(grid.y(j) - p.y) > 1e-9 * (1.0 + std::abs(p.y))) {
                throw EvaluationError("boundary file defines values only at "
                                      "grid nodes");
            }
            Jet2 jet;
            jet.value = values[grid.index(i, j)];
            return jet;
        },
        "csv:" + arg);
    return {field, "csv:" + arg, std::move(gf)};
}

int cmd_classify(OperatorParams params, int dim, const std::string& regularity,
                 std::optional<double> gradient_bound) {
    BernsteinQuery q;
    q.params = params;
    q.dimension = dim;
    q.regularity = regularity_from_string(regularity);
    q.gradient_bound = gradient_bound;

    ordered_json out;
    out["gamma"] = params.gamma;
    out["epsilon"] = params.epsilon;
    out["ellipticity"] = ellipticity_json(params);
    out["nitsche"] = nitsche_json(params);
    out["bernstein"] = verdict_json(bernstein_verdict(q));
    out["bernstein"]["dim"] = dim;
    out["bernstein"]["regularity"] = regularity;
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_residual(const std::string& solution, OperatorParams params,
                 const GridSpec& grid) {
    ScalarField2 field = solution.rfind("separable:", 0) == 0
                             ? build_wrong_mse_solution(
                                   std::stod(solution.substr(10)))
                             : catalog(solution).field;
    double worst = 0.0, sum2 = 0.0;
    Point2 worst_at{grid.x0, grid.y0};
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const Point2 p{grid.x(i), grid.y(j)};
            const double r = l_residual(params, field.jet(p));
            sum2 += r * r;
            if (std::abs(r) > worst) {
                worst = std::abs(r);
                worst_at = p;
            }
        }
    }
    ordered_json out;
    out["solution"] = solution;
    out["gamma"] = params.gamma;
    out["epsilon"] = params.epsilon;
    out["grid"] = grid_json(grid);
    out["points"] = grid.size();
    out["max_abs_residual"] = worst;
    out["rms_residual"] = std::sqrt(sum2 / grid.size());
    out["worst_at"] = {worst_at.x, worst_at.y};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_nitsche(OperatorParams params) {
    ordered_json out;
    out["gamma"] = params.gamma;
    out["epsilon"] = params.epsilon;
    out["nitsche"] = nitsche_json(params);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_construct(double c, const std::string& out_path, double range,
                  int nodes) {
    const SeparableSolution sol(c);
    const ScalarField2 field = sol.field();

    GridSpec grid{-range, range, -range, range, nodes, nodes};
    grid.validate();
    const GridFunction gf = sample_field(field, grid);
    write_csv_file(gf, out_path);

    double worst = 0.0;
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const Jet2 jet = field.jet({grid.x(i), grid.y(j)});
            worst = std::max(worst,
                             std::abs(named_form_residual(
                                 NamedForm::wrong_minimal_surface, jet)));
        }
    }

    ordered_json out;
    out["c"] = c;
    out["gpp_at_zero"] = sol.g().deriv2(0.0);
    out["nonlinear"] = c != 0.0;
    out["wrong_mse_max_residual"] = worst;
    out["grid"] = grid_json(grid);
    out["out"] = out_path;
    std::cout << out.dump(2) << "\n";
    std::cerr << "construct: wrote " << grid.size() << " samples to "
              << out_path << "\n";
    return 0;
}

int cmd_solve(OperatorParams params, const std::string& boundary,
              const std::optional<std::string>& grid_spec,
              const std::string& out_path) {
    const BoundarySource src = resolve_boundary(boundary);

    GridSpec grid;
    if (src.file_grid) {
        grid = src.file_grid->grid;
        if (grid_spec) {
            const GridSpec requested = parse_grid_spec(*grid_spec);
            if (requested.nx != grid.nx || requested.ny != grid.ny ||
                requested.x0 != grid.x0 || requested.x1 != grid.x1 ||
                requested.y0 != grid.y0 || requested.y1 != grid.y1) {
                throw CLI::ValidationError(
                    "--grid", "conflicts with the boundary file's grid");
            }
        }
    } else {
        if (!grid_spec) {
            throw CLI::ValidationError("--grid",
                                       "required with a boundary id");
        }
        grid = parse_grid_spec(*grid_spec);
    }

    const ScalarField2 field = src.field;
    SolveStats stats;
    ordered_json out;
    out["gamma"] = params.gamma;
    out["epsilon"] = params.epsilon;
    out["boundary"] = src.label;
    out["grid"] = grid_json(grid);
    try {
        const GridFunction u = solve_dirichlet(
            params, grid,
            [&](double x, double y) { return field.jet({x, y}).value; }, {},
            &stats);
        write_csv_file(u, out_path);
        out["converged"] = true;
        out["iterations"] = stats.iterations;
        out["max_residual"] = stats.max_residual;
        out["elliptic_warning"] = stats.elliptic_warning;
        out["out"] = out_path;
        std::cout << out.dump(2) << "\n";
        std::cerr << "solve: converged in " << stats.iterations
                  << " iterations (max residual " << stats.max_residual
                  << ")\n";
        return 0;
    } catch (const ConvergenceError& e) {
        out["converged"] = false;
        out["error"] = e.what();
        out["iterations"] = e.iteration();
        std::cout << out.dump(2) << "\n";
        std::cerr << "solve: " << e.what() << "\n";
        return 1;
    } catch (const LinearSolveError& e) {
        out["converged"] = false;
        out["error"] = e.what();
        out["iterations"] = e.iteration();
        std::cout << out.dump(2) << "\n";
        std::cerr << "solve: " << e.what() << "\n";
        return 1;
    }
}

int cmd_catalog_verify() {
    const auto checks = run_catalog_checks();
    bool all_pass = true;
    ordered_json entries = ordered_json::array();
    for (const CatalogCheck& c : checks) {
        all_pass = all_pass && c.pass;
        entries.push_back({{"id", to_string(c.id)},
                           {"gamma", c.params.gamma},
                           {"epsilon", c.params.epsilon},
                           {"points", c.points},
                           {"max_abs_residual", c.max_abs_residual},
                           {"pass", c.pass}});
    }
    ordered_json out;
    out["entries"] = entries;
    out["all_pass"] = all_pass;
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_report() {
    std::cout << nlohmann::ordered_json::parse(knowledge_table_json()).dump(2)
              << "\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Bernstein-property toolkit for the L_{gamma,epsilon} "
                 "family of quasilinear equations"};
    app.require_subcommand(1);

    double gamma = 0.0, epsilon = 0.0;
    int dim = 2;
    std::string regularity = "c2";
    std::optional<double> gradient_bound;

    auto* classify = app.add_subcommand(
        "classify", "ellipticity, Nitsche report and affineness verdict");
    classify->add_option("--gamma", gamma)->required();
    classify->add_option("--epsilon", epsilon)->required();
    classify->add_option("--dim", dim)->check(CLI::Range(2, 64));
    classify->add_option("--regularity", regularity)
        ->check(CLI::IsMember({"c2", "c4"}));
    classify->add_option("--gradient-bound", gradient_bound);

    std::string solution, grid_spec;
    auto* residual = app.add_subcommand(
        "residual", "L-residual of a cataloged solution on a sample grid");
    residual->add_option("--solution", solution)->required();
    residual->add_option("--gamma", gamma)->required();
    residual->add_option("--epsilon", epsilon)->required();
    residual->add_option("--grid", grid_spec)->required();

    auto* nitsche =
        app.add_subcommand("nitsche", "divergence verdict for the Nitsche integral");
    nitsche->add_option("--gamma", gamma)->required();
    nitsche->add_option("--epsilon", epsilon)->required();

    double sep_c = 1.0, range = 10.0;
    int nodes = 21;
    std::string out_path;
    auto* construct = app.add_subcommand(
        "construct", "build the separable wrong-MSE solution, export CSV");
    construct->add_option("--c", sep_c)->required();
    construct->add_option("--out", out_path)->required();
    construct->add_option("--range", range)->check(CLI::PositiveNumber);
    construct->add_option("--nodes", nodes)->check(CLI::Range(3, 4097));

    std::string boundary;
    std::optional<std::string> solve_grid;
    auto* solve = app.add_subcommand(
        "solve", "Newton solve of the Dirichlet problem on a rectangle");
    solve->add_option("--gamma", gamma)->required();
    solve->add_option("--epsilon", epsilon)->required();
    solve->add_option("--boundary", boundary, "catalog id, separable:C, or CSV file")
        ->required();
    solve->add_option("--grid", solve_grid);
    solve->add_option("--out", out_path)->required();

    auto* catalog_verify = app.add_subcommand(
        "catalog-verify", "residual suite over the whole solution catalog");
    auto* report =
        app.add_subcommand("report", "export the knowledge table as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const OperatorParams params{gamma, epsilon};
        if (classify->parsed()) {
            return cmd_classify(params, dim, regularity, gradient_bound);
        }
        if (residual->parsed()) {
            return cmd_residual(solution, params, parse_grid_spec(grid_spec));
        }
        if (nitsche->parsed()) return cmd_nitsche(params);
        if (construct->parsed()) {
            return cmd_construct(sep_c, out_path, range, nodes);
        }
        if (solve->parsed()) {
            return cmd_solve(params, boundary, solve_grid, out_path);
        }
        if (catalog_verify->parsed()) return cmd_catalog_verify();
        if (report->parsed()) return cmd_report();
        std::cerr << app.help();
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownIdError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

} // namespace bernstein::cli
