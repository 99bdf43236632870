#include "qrcs/errors.hpp"
#include "qrcs/resource_estimator.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrcs;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

CostParams anchor_params() {
    const AnchorEstimate a = scherer_anchor();
    return CostParams({.n = a.n, .d = a.d, .kappa = a.kappa, .epsilon = a.epsilon});
}

}  // namespace

TEST_CASE("anchor instance") {
    const AnchorEstimate a = scherer_anchor();
    CHECK(a.n == 332020680.0);
    CHECK(a.kappa == 1e4);
    CHECK(a.d == 7);
    CHECK(a.epsilon == 1e-2);
    CHECK(a.with_oracles.logical_qubits == 3e8);
    CHECK(a.with_oracles.steps == 1.8e29);
    CHECK(a.with_oracles.toffoli == 9.5e28);
    CHECK(a.without_oracles.logical_qubits == 341);
    CHECK(a.without_oracles.steps == 3.30e25);
    CHECK(a.without_oracles.toffoli == 1.29e25);
    CHECK_NOTHROW(validate(a));

    AnchorEstimate bad = a;
    bad.without_oracles.steps = 1e30;
    CHECK_THROWS_AS(validate(bad), ParameterError);
    bad = a;
    bad.with_oracles.toffoli = -1;
    CHECK_THROWS_AS(validate(bad), ParameterError);
    bad = a;
    bad.epsilon = 2.0;
    CHECK_THROWS_AS(validate(bad), ParameterError);
}

TEST_CASE("prefactor fit") {
    const AnchorEstimate a = scherer_anchor();
    CHECK(rel(anchor_denominator(a), 1615849657534529.8) < 1e-13);
    CHECK(rel(anchor_denominator(a), 1.62e15) < 0.01);
    CHECK(rel(fit_prefactor(a), 111396502243064.34) < 1e-13);
    CHECK(rel(fit_prefactor(a), 1.11e14) < 0.01);

    AnchorEstimate unit = a;
    unit.with_oracles.steps = anchor_denominator(a);
    unit.without_oracles.steps = 1.0;
    CHECK(fit_prefactor(unit) == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("extrapolate") {
    const AnchorEstimate a = scherer_anchor();
    const double c = fit_prefactor(a);
    const CostParams p = anchor_params();

    const Extrapolation same = extrapolate(c, p, ModelVariant::CJS);
    CHECK(rel(same.steps, 1.8e29) < 1e-12);
    CHECK(same.variant == ModelVariant::CJS);
    CHECK_FALSE(same.caveats.empty());

    CHECK(rel(extrapolate(c, p.with_n(1e12), ModelVariant::CJS).steps, 2.5348646175208893e29) < 1e-12);
    CHECK(rel(extrapolate(c, p.with_n(1e12), ModelVariant::CJS).steps, 2.5e29) < 0.02);

    const double cks = extrapolate(c, p, ModelVariant::CJS_CKS).steps;
    CHECK(cks / same.steps == Approx(1e-2 * std::log(100.0)).epsilon(1e-13));

    const CostParams with_cg = p.with_prefactors(3.0, 99.0);
    CHECK(extrapolate(c, with_cg, ModelVariant::CG).steps == Approx(cg_runtime(with_cg)));
    CHECK(extrapolate(c, with_cg, ModelVariant::CJSWithCorrection).steps ==
          Approx(cjs_runtime(p.with_prefactors(3.0, c), true)));
}

TEST_CASE("extrapolation depends on N through ln N only") {
    const double c = 1.11e14;
    const CostParams p = anchor_params();
    for (double n : {10.0, 1e4, 3.32e8, 1e12, 1e20}) {
        const double base = extrapolate(c, p.with_n(n), ModelVariant::CJS).steps;
        const double doubled = extrapolate(c, p.with_n(2 * n), ModelVariant::CJS).steps;
        CHECK(doubled / base == Approx(std::log(2 * n) / std::log(n)).epsilon(1e-13));
    }
}

TEST_CASE("wall clock") {
    const WallClock w88 = wall_clock(1.11e14);
    CHECK(rel(w88.years, 87.93444368393034) < 1e-13);
    CHECK(rel(w88.years, 88.0) < 0.02);

    const WallClock big = wall_clock(1.8e29);
    CHECK(rel(big.years, 1.4e17) < 0.05);
    CHECK(rel(big.universe_ages, 1e7) < 0.1);
    CHECK(big.universe_ages == Approx(big.years / 1.38e10));

    const WallClock one = wall_clock(1.0);
    CHECK(one.seconds == 25e-6);
    CHECK(one.years == Approx(25e-6 / (365.25 * 86400.0)));

    HardwareProfile fast;
    fast.seconds_per_logical_step = 1e-9;
    CHECK(wall_clock(1e9, fast).seconds == Approx(1.0));

    CHECK_THROWS_AS(wall_clock(0.0), ParameterError);
    CHECK_THROWS_AS(wall_clock(-5.0), ParameterError);
    HardwareProfile broken;
    broken.seconds_per_logical_step = 0.0;
    CHECK_THROWS_AS(wall_clock(1.0, broken), ParameterError);
}

TEST_CASE("wall clock is linear in steps") {
    for (double s : {1.0, 3.7e5, 1.11e14, 1.8e29})
        for (double a : {0.5, 2.0, 1e6}) {
            const WallClock base = wall_clock(s);
            const WallClock scaled = wall_clock(a * s);
            CHECK(scaled.seconds == Approx(a * base.seconds).epsilon(1e-14));
            CHECK(scaled.years == Approx(a * base.years).epsilon(1e-14));
            CHECK(scaled.universe_ages == Approx(a * base.universe_ages).epsilon(1e-14));
        }
}

TEST_CASE("improvement scenario") {
    const ImprovementReport five = improvement_scenario(1.8e29, 5);
    CHECK(five.steps == Approx(1.8e24));
    CHECK(rel(five.wall.universe_ages, 100.0) < 0.1);

    const ImprovementReport zero = improvement_scenario(4.2e10, 0);
    CHECK(zero.steps == 4.2e10);

    CHECK(rel(improvement_scenario(1.8e29, 12).wall.years, 1.4e5) < 0.05);

    for (double a : {0.0, 0.5, 3.0})
        for (double b : {0.0, 1.25, 7.0}) {
            const double joint = improvement_scenario(1.8e29, a + b).steps;
            const double chained = improvement_scenario(improvement_scenario(1.8e29, a).steps, b).steps;
            CHECK(chained == Approx(joint).epsilon(1e-13));
        }

    CHECK_THROWS_AS(improvement_scenario(1e10, -1), ParameterError);
    CHECK_THROWS_AS(improvement_scenario(0.0, 1), ParameterError);
}

TEST_CASE("Hamiltonian-simulation accounting") {
    const HamiltonianAccounting h = hamiltonian_accounting(anchor_params());
    CHECK(h.subroutine_calls == 1.2e5);
    CHECK(h.dominant_term == 1e8);
    CHECK(h.per_call_time_steps == 2.5e12);
    CHECK(h.total_sequential_steps == h.subroutine_calls * h.per_call_time_steps);
    CHECK(h.total_sequential_steps == Approx(3e17));
    CHECK(std::abs(std::log10(h.total_sequential_steps) - 18.0) <= 1.0);
    CHECK(h.matrix_oracle_queries == Approx(1e20));
    CHECK(h.oracle_circuit_steps == 1e8);
    CHECK(kNarratedSubroutineCalls > h.subroutine_calls);

    // Total = calls x per-call for arbitrary inputs.
    for (double eps : {0.5, 1e-1, 1e-3})
        for (double kappa : {1.0, 37.0, 1e6}) {
            const auto g = hamiltonian_accounting(anchor_params().with_epsilon(eps).with_kappa(kappa));
            CHECK(g.total_sequential_steps == g.subroutine_calls * g.per_call_time_steps);
            CHECK(g.subroutine_calls == Approx(12.0 / (eps * eps)));
            CHECK(g.dominant_term == Approx(std::pow(kappa, 1.25) / std::pow(eps, 1.5)));
        }
}
