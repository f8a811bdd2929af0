#include "doctest.h"

#include <cmath>
#include <vector>

#include "bernstein/quadrature.hpp"
#include "bernstein/variational.hpp"
#include "testutil.hpp"

using namespace bernstein;
using testutil::Rng;
using testutil::rel_err;

namespace {

// the admissible sample used across the property tests
std::vector<OperatorParams> admissible_lattice() {
    std::vector<OperatorParams> out;
    for (double g : {1.5, 2.0, 3.0}) {
        for (double e : {0.5, 1.0, 2.0}) out.push_back({g, e});
    }
    for (double g : {-1.0, -2.0, -3.0}) {
        for (double e : {-0.5, -1.0, -2.0}) out.push_back({g, e});
    }
    for (double e : {0.5, 1.0, 2.0}) out.push_back({1.0, e});
    for (double g : {-3.0, -2.0, 1.5, 2.0, 3.0}) out.push_back({g, 0.0});
    return out;
}

std::vector<double> log_sampled_w() {
    std::vector<double> out;
    for (int i = 0; i <= 24; ++i) {
        out.push_back(0.1 * std::pow(1000.0, i / 24.0)); // 0.1 .. 100
    }
    return out;
}

} // namespace

TEST_SUITE("variational") {

TEST_CASE("density case split and values") {
    const VariationalDensity d11({1.0, 1.0});
    CHECK(d11.density_case() == DensityCase::exponential);
    CHECK(d11.value(0.0) == 1.0);
    CHECK(d11.value(2.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));

    const VariationalDensity d21({2.0, 1.0});
    CHECK(d21.density_case() == DensityCase::power);
    CHECK(d21.value(2.0) == doctest::Approx(16.0).epsilon(1e-14));

    const VariationalDensity dm1({-1.0, -1.0});
    CHECK(dm1.density_case() == DensityCase::power);
    CHECK(dm1.value(1.0) == doctest::Approx(2.0).epsilon(1e-14));

    const VariationalDensity dp({2.0, 0.0});
    CHECK(dp.density_case() == DensityCase::p_power);
}

TEST_CASE("inadmissible parameters are rejected") {
    CHECK_THROWS_AS(VariationalDensity({1.0, -1.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({1.0, 0.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({0.5, 1.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({0.0, 0.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({-1.0, 0.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({-1.0, 1.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(VariationalDensity({-0.5, -1.0}), InadmissibleParamsError);
    CHECK(density_admissible({2.0, 1.0}));
    CHECK_FALSE(density_admissible({2.0, -1.0}));
}

TEST_CASE("p-power density has the c(p)/p w^{p/2} shape") {
    for (double g : {-3.0, -2.0, 1.5, 2.0, 3.0}) {
        const VariationalDensity d({g, 0.0});
        const double p = p_from_gamma(g).value;
        const double cp = d.p_normalizer();
        CHECK(cp == doctest::Approx(p * std::pow(std::abs(g - 1.0), 0.5 * p))
                        .epsilon(1e-13));
        for (double w : {0.5, 1.0, 2.0, 10.0}) {
            const double shape = cp / p * std::pow(w, 0.5 * p);
            CHECK(rel_err(d.value(w), shape) <= 1e-12);
        }
    }
}

TEST_CASE("lambda values and pole") {
    CHECK(lambda_value({-1.0, -1.0}, 1.0) == -0.5);
    CHECK(lambda_value({1.0, 1.0}, 0.37) == 1.0);
    CHECK(lambda_value({2.0, 1.0}, 0.0) == 1.0);
    // denominator 2e + (g-1) w = -1 + w vanishes at w = 1
    CHECK_THROWS_AS(lambda_value({2.0, -0.5}, 1.0), PoleError);
}

TEST_CASE("lambda is 2F''/F' for every admissible density") {
    for (const OperatorParams p : admissible_lattice()) {
        const VariationalDensity d(p);
        for (double w : log_sampled_w()) {
            const double direct = 2.0 * d.second(w) / d.first(w);
            CHECK(rel_err(direct, lambda_value(p, w)) <= 1e-8);
        }
    }
}

TEST_CASE("Nitsche integrand values") {
    CHECK(nitsche_integrand({1.0, 1.0}, 1.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    for (double w : {1.0, 10.0, 100.0}) {
        CHECK(rel_err(nitsche_integrand({2.0, 1.0}, w),
                      nitsche_integrand_reduced({2.0, 1.0}, w)) <= 1e-12);
    }
    // minimal surface integrand decays like 1/w^2
    const double w = 1e6;
    CHECK(std::abs(w * w * nitsche_integrand({-1.0, -1.0}, w) - 1.0) <= 3e-6);
    CHECK_THROWS_AS(nitsche_integrand({1.0, 1.0}, 0.0), PoleError);
}

TEST_CASE("quadrature matches the closed-form antiderivative") {
    const std::vector<OperatorParams> params = {
        {1.0, 1.0}, {2.0, 1.0}, {3.0, 1.0}, {-1.0, -1.0}, {-2.0, -1.0}};
    for (const OperatorParams p : params) {
        for (double W : {10.0, 100.0, 1000.0}) {
            const double quad = adaptive_simpson(
                [&](double w) { return nitsche_integrand_reduced(p, w); }, 1.0,
                W, 1e-9);
            const double closed =
                nitsche_antiderivative(p, W) - nitsche_antiderivative(p, 1.0);
            CHECK(std::abs(quad - closed) <= 1e-6);
        }
    }
    // gamma = 0 variant of the antiderivative: d/dw (w/(4e) + ln(w)/2)
    const OperatorParams g0{0.0, 1.0};
    const double fd = (nitsche_antiderivative(g0, 5.0 + 1e-6) -
                       nitsche_antiderivative(g0, 5.0 - 1e-6)) /
                      2e-6;
    CHECK(rel_err(fd, nitsche_integrand_reduced(g0, 5.0)) <= 1e-8);
}

TEST_CASE("Nitsche verdicts") {
    const NitscheReport r21 = nitsche_verdict({2.0, 1.0});
    CHECK(r21.verdict == NitscheVerdict::diverges);
    CHECK(r21.tail_coefficient == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(r21.bernstein_conclusion ==
          BernsteinConclusion::no_bernstein_property);

    const NitscheReport r11 = nitsche_verdict({1.0, 1.0});
    CHECK(r11.verdict == NitscheVerdict::diverges);
    CHECK(r11.tail_coefficient == 1.0);

    const NitscheReport rm = nitsche_verdict({-1.0, -1.0});
    CHECK(rm.verdict == NitscheVerdict::converges);
    CHECK(rm.tail_coefficient == 0.0);
    CHECK(rm.bernstein_conclusion == BernsteinConclusion::criterion_silent);

    CHECK_THROWS_AS(nitsche_verdict({0.0, 0.0}), InadmissibleParamsError);
    CHECK_THROWS_AS(nitsche_verdict({-1.0, 1.0}), InadmissibleParamsError);
}

TEST_CASE("partial integrals corroborate the symbolic verdict") {
    for (const OperatorParams p : admissible_lattice()) {
        const NitscheReport rep = nitsche_verdict(p);
        REQUIRE(rep.partial_integrals.size() == 4);
        for (std::size_t i = 1; i < rep.partial_integrals.size(); ++i) {
            CHECK(rep.partial_integrals[i].second >
                  rep.partial_integrals[i - 1].second);
        }
        const double ratio = rep.partial_integrals.back().second /
                             rep.partial_integrals.front().second;
        if (rep.verdict == NitscheVerdict::diverges) {
            CHECK(ratio >= kDivergenceGrowthRatio);
            // slope of the last decade approximates the tail coefficient
            CHECK(rel_err(rep.last_decade_slope, rep.tail_coefficient) <= 0.05);
        } else {
            CHECK(ratio < kDivergenceGrowthRatio);
            CHECK(std::abs(rep.last_decade_slope) <= 0.01);
        }
    }
}

TEST_CASE("divergence concludes nothing for the degenerate eps = 0 family") {
    const NitscheReport rep = nitsche_verdict({2.0, 0.0});
    CHECK(rep.verdict == NitscheVerdict::diverges);
    CHECK_FALSE(rep.criterion_applicable);
    CHECK(rep.bernstein_conclusion == BernsteinConclusion::criterion_silent);
}

TEST_CASE("Euler-Lagrange residual vanishes on affine jets") {
    Jet2 aff;
    aff.ux = 0.3;
    aff.uy = -2.0;
    CHECK(el_residual({2.0, 1.0}, aff) == 0.0);
    CHECK(el_residual({-1.0, -1.0}, aff) == 0.0);
}

TEST_CASE("EL bridge: el * (2e + (g-1)w) = 2F' * l") {
    Rng rng(777);
    for (const OperatorParams p : admissible_lattice()) {
        const VariationalDensity d(p);
        for (int k = 0; k < 200; ++k) {
            const Jet2 j = rng.jet_nonzero_grad();
            const double w = j.w();
            const double lhs = el_residual(p, j) *
                               (2.0 * p.epsilon + (p.gamma - 1.0) * w);
            const double rhs = 2.0 * d.first(w) * l_residual(p, j);
            CHECK(rel_err(lhs, rhs) <= 1e-10);
        }
    }
}

TEST_CASE("EL/L proportionality factor") {
    Rng rng(778);
    const OperatorParams p{-1.0, -1.0};
    const VariationalDensity d(p);
    for (int k = 0; k < 100; ++k) {
        const Jet2 j = rng.jet_nonzero_grad();
        const double l = l_residual(p, j);
        if (std::abs(l) < 1e-6) continue;
        const double w = j.w();
        const double factor =
            2.0 * d.first(w) / (2.0 * p.epsilon + (p.gamma - 1.0) * w);
        CHECK(rel_err(el_residual(p, j) / l, factor) <= 1e-10);
    }
}

TEST_CASE("p <-> gamma correspondence") {
    CHECK(p_from_gamma(-1.0).value == 1.0);
    CHECK(p_from_gamma(1.0).is_infinite());
    CHECK(gamma_from_p(4.0) == 2.0);
    CHECK(p_from_gamma(2.0).value == 4.0);
    CHECK_THROWS_AS(gamma_from_p(2.0), InadmissibleParamsError);
    CHECK(gamma_from_p(p_from_gamma(1.0).value) == 1.0);

    for (double g : {-3.0, -2.0, -1.0, 1.5, 2.0, 3.0}) {
        const PExponent p = p_from_gamma(g);
        CHECK(p.value != 2.0);
        CHECK(gamma_from_p(p) == g); // exact on this set
        // the bare-double inversion is within an ulp even when p itself
        // is not representable (p = 4/3 at gamma = -2)
        CHECK(testutil::rel_err(gamma_from_p(p.value), g) <= 1e-15);
    }
}

} // TEST_SUITE
