#include <cmath>
#include <vector>

#include "doctest.h"

#include "cgq/assignment.hpp"
#include "cgq/channel.hpp"
#include "cgq/dynamics.hpp"
#include "cgq/errors.hpp"
#include "cgq/states.hpp"
#include "test_helpers.hpp"

using namespace cgq;
using cgqtest::matn;

namespace {

constexpr double kPi = 3.14159265358979323846;

DensityMatrix qubit(double r00, c64 r01, double r11) {
    return DensityMatrix::unchecked(matn(2, {r00, r01, std::conj(r01), r11}));
}

EffectiveChannelSpec bns_spec(const std::string& preset) {
    EffectiveChannelSpec spec;
    spec.channel = bns_channel();
    spec.hamiltonian = hamiltonian_preset(preset);
    return spec;
}

EffectiveChannelSpec ptr_spec(const std::string& preset) {
    EffectiveChannelSpec spec;
    spec.channel = partial_trace_channel(2, 2);
    spec.hamiltonian = hamiltonian_preset(preset);
    return spec;
}

double min_eigenvalue(const ComplexMatrix& m) {
    ComplexMatrix sym = m;
    sym += adjoint(m);
    sym *= c64{0.5, 0.0};
    return herm_eig(sym).values.front();
}

} // namespace

TEST_CASE("the effective map at t = 0 is the identity for both channels") {
    auto rng = cgqtest::test_rng(201);
    const EffectiveChannelSpec specs[] = {bns_spec("local-y"), ptr_spec("global-y")};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 50; ++trial) {
            const DensityMatrix rho = cgqtest::random_density(2, rng);
            CHECK(max_abs_diff(effective_evolve(spec, rho, 0.0).mat, rho.mat) <= 1e-12);
        }
    }
}

TEST_CASE("blurred-channel ground population at t = pi/3 follows 1/4 - r/2") {
    // For rho_r = [[1/2, r], [r, 1/2]] under the blurred channel with the
    // environment-only y rotation, the ground population at omega*t = pi/3 is
    // exactly 1/4 - r/2: the nonlinear cross term r^2 contributed by the
    // assignment cancels against the coherence transport, leaving a linear
    // ramp from 1/4 (maximally mixed) to 0 (pure |+><+|, whose compatible set
    // is the single state that the rotation carries straight to |11>-free
    // weight on the ground row).
    const EffectiveChannelSpec spec = bns_spec("local-y");
    for (int i = 0; i <= 10; ++i) {
        const double r = 0.05 * i;
        const DensityMatrix rho = qubit(0.5, r, 0.5);
        const DensityMatrix out = effective_evolve(spec, rho, kPi / 3.0);
        CHECK(out.mat.at(0, 0).real() == doctest::Approx(0.25 - 0.5 * r).epsilon(1e-12));
        CHECK(std::abs(out.mat.at(0, 0).imag()) <= 1e-15);
    }
}

TEST_CASE("effective evolution preserves trace, hermiticity, and positivity") {
    auto rng = cgqtest::test_rng(211);
    const std::vector<double> ts = [] {
        std::vector<double> g;
        for (int k = 0; k < 100; ++k) g.push_back(2.0 * kPi * k / 99.0);
        return g;
    }();
    const EffectiveChannelSpec specs[] = {bns_spec("local-y"), ptr_spec("global-y")};
    for (const auto& spec : specs) {
        for (int trial = 0; trial < 20; ++trial) {
            const DensityMatrix rho = cgqtest::random_density(2, rng);
            const auto series = effective_evolve_series(spec, rho, ts);
            REQUIRE(series.size() == ts.size());
            for (const auto& out : series) {
                CHECK(std::abs(trace(out.mat) - c64{1.0, 0.0}) <= 1e-12);
                CHECK(hermiticity_defect(out.mat) <= 1e-12);
                CHECK(min_eigenvalue(out.mat) >= -1e-10);
            }
        }
    }
}

TEST_CASE("environment-only rotations make the effective map pi-periodic") {
    // exp(-i pi sigma_y) = -1, a pure phase, so conjugation at t and t + pi
    // coincide exactly; the map inherits the period.
    auto rng = cgqtest::test_rng(223);
    const EffectiveChannelSpec spec = bns_spec("local-y");
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const double t = 2.0 * kPi * rng.uniform01();
        CHECK(max_abs_diff(effective_evolve(spec, rho, t).mat,
                           effective_evolve(spec, rho, t + kPi).mat) <= 1e-10);
    }
}

TEST_CASE("series evaluation matches pointwise evaluation") {
    auto rng = cgqtest::test_rng(227);
    const DensityMatrix rho = cgqtest::random_density(2, rng);
    const std::vector<double> ts{0.0, 0.37, 1.0, kPi / 3.0, 2.2, 2.0 * kPi};
    for (const auto& spec : {bns_spec("local-y"), ptr_spec("global-y")}) {
        const auto series = effective_evolve_series(spec, rho, ts);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            CHECK(max_abs_diff(series[i].mat, effective_evolve(spec, rho, ts[i]).mat) <=
                  1e-12);
        }
    }
}

TEST_CASE("open-system evolution under sigma_y (x) sigma_y dephases |0><0|") {
    const HamiltonianSpec h = HamiltonianSpec::checked(tensor(pauli_y(), pauli_y()), "yy");
    const DensityMatrix ground = qubit(1.0, 0.0, 0.0);
    for (double t : {0.0, 0.3, 1.1, 2.7, 5.0}) {
        const DensityMatrix out = open_system_evolve(h, ground, 2, t);
        const double c2 = std::cos(t) * std::cos(t);
        const ComplexMatrix expect = matn(2, {c2, 0.0, 0.0, 1.0 - c2});
        CHECK(max_abs_diff(out.mat, expect) <= 1e-12);
    }
}

TEST_CASE("open-system evolution agrees with a brute-force matrix exponential") {
    auto rng = cgqtest::test_rng(229);
    for (int trial = 0; trial < 10; ++trial) {
        const HamiltonianSpec h =
            HamiltonianSpec::checked(cgqtest::random_hermitian(4, rng), "random");
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const double t = 4.0 * kPi * (rng.uniform01() - 0.5);

        const ComplexMatrix u = cgqtest::expm_taylor_propagator(h.mat, t);
        ComplexMatrix half_env = ComplexMatrix::identity(2);
        half_env *= c64{0.5, 0.0};
        const ComplexMatrix joint = u * kron(rho.mat, half_env) * adjoint(u);
        const ComplexMatrix expect = partial_trace_env(joint, 2, 2);

        CHECK(max_abs_diff(open_system_evolve(h, rho, 2, t).mat, expect) <= 1e-12);
    }
}

TEST_CASE("non-interacting hamiltonians reduce to system-only unitaries") {
    // With H = H_S (x) 1 + 1 (x) H_E the joint propagator factorizes, the
    // environment factor commutes past rho (x) I/d and cancels under the
    // trace, and the reduced dynamics is exactly unitary on the system.
    auto rng = cgqtest::test_rng(228);
    for (int trial = 0; trial < 40; ++trial) {
        const ComplexMatrix hs = cgqtest::random_hermitian(2, rng);
        const ComplexMatrix he = cgqtest::random_hermitian(2, rng);
        const HamiltonianSpec joint = HamiltonianSpec::checked(
            tensor(hs, ComplexMatrix::identity(2)) + tensor(ComplexMatrix::identity(2), he),
            "separable");
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const double t = 4.0 * kPi * (rng.uniform01() - 0.5);

        const ComplexMatrix us = unitary_at(HamiltonianSpec::checked(hs, "hs"), t);
        const ComplexMatrix expect = us * rho.mat * adjoint(us);
        CHECK(max_abs_diff(open_system_evolve(joint, rho, 2, t).mat, expect) <= 1e-12);
    }
}

TEST_CASE("open-system evolution is the partial-trace effective dynamics") {
    auto rng = cgqtest::test_rng(233);

    SUBCASE("qubit environment") {
        const EffectiveChannelSpec spec = ptr_spec("global-y");
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        for (double t : {0.1, 0.9, 2.5, 4.8}) {
            CHECK(max_abs_diff(open_system_evolve(spec.hamiltonian, rho, 2, t).mat,
                               effective_evolve(spec, rho, t).mat) <= 1e-12);
        }
    }
    SUBCASE("qutrit environment") {
        EffectiveChannelSpec spec;
        spec.channel = partial_trace_channel(2, 3);
        spec.hamiltonian =
            HamiltonianSpec::checked(cgqtest::random_hermitian(6, rng), "random6");
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        for (double t : {0.2, 1.7, 3.9}) {
            CHECK(max_abs_diff(open_system_evolve(spec.hamiltonian, rho, 3, t).mat,
                               effective_evolve(spec, rho, t).mat) <= 1e-12);
        }
    }
    SUBCASE("series form matches pointwise") {
        const HamiltonianSpec h = hamiltonian_preset("global-y");
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const std::vector<double> ts{0.0, 0.6, 1.9, 3.3, 6.1};
        const auto series = open_system_evolve_series(h, rho, 2, ts);
        REQUIRE(series.size() == ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            CHECK(max_abs_diff(series[i].mat, open_system_evolve(h, rho, 2, ts[i]).mat) <=
                  1e-12);
        }
    }
}

TEST_CASE("partial-trace effective dynamics is exactly linear") {
    auto rng = cgqtest::test_rng(239);
    const EffectiveChannelSpec spec = ptr_spec("global-y");
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const DensityMatrix chi = cgqtest::random_density(2, rng);
        const double alpha = rng.uniform01();
        const double t = 2.0 * kPi * rng.uniform01();
        CHECK(linearity_probe(spec, rho, chi, alpha, t) <= 1e-12);
    }
}

TEST_CASE("blurred-channel effective dynamics is measurably nonlinear") {
    const EffectiveChannelSpec spec = bns_spec("local-y");
    const DensityMatrix plus = qubit(0.5, 0.5, 0.5);
    const DensityMatrix ground = qubit(1.0, 0.0, 0.0);

    SUBCASE("the witness pair deviates by exactly 1/24 at t = pi/3") {
        const double probe = linearity_probe(spec, plus, ground, 0.5, kPi / 3.0);
        CHECK(probe == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
        CHECK(probe >= 1e-3);
    }
    SUBCASE("degenerate mixing weights cannot expose nonlinearity") {
        CHECK(linearity_probe(spec, plus, ground, 1.0, kPi / 3.0) <= 1e-15);
        CHECK(linearity_probe(spec, plus, ground, 0.0, kPi / 3.0) <= 1e-15);
    }
}

TEST_CASE("Monte-Carlo assignment leg reproduces the closed-form dynamics") {
    auto rng = cgqtest::test_rng(241);

    EffectiveChannelSpec mc_bns = bns_spec("local-y");
    mc_bns.assigner = AssignerKind::MonteCarlo;
    mc_bns.sampler.sample_count = 1'000'000;
    mc_bns.sampler.seed = 17;
    const EffectiveChannelSpec cf_bns = bns_spec("local-y");

    EffectiveChannelSpec mc_ptr = ptr_spec("global-y");
    mc_ptr.assigner = AssignerKind::MonteCarlo;
    mc_ptr.sampler.sample_count = 1'000'000;
    mc_ptr.sampler.seed = 17;
    const EffectiveChannelSpec cf_ptr = ptr_spec("global-y");

    for (int trial = 0; trial < 6; ++trial) {
        DensityMatrix rho = cgqtest::random_density(2, rng);
        while (rho.mat.at(0, 0).real() < 0.05) rho = cgqtest::random_density(2, rng);
        const double t = 2.0 * kPi * rng.uniform01();
        CHECK(max_abs_diff(effective_evolve(mc_bns, rho, t).mat,
                           effective_evolve(cf_bns, rho, t).mat) <= 5e-3);
    }
    for (int trial = 0; trial < 4; ++trial) {
        const DensityMatrix rho = cgqtest::random_density(2, rng);
        const double t = 2.0 * kPi * rng.uniform01();
        CHECK(max_abs_diff(effective_evolve(mc_ptr, rho, t).mat,
                           effective_evolve(cf_ptr, rho, t).mat) <= 5e-3);
    }
}

TEST_CASE("dynamics interfaces reject malformed specifications") {
    auto rng = cgqtest::test_rng(251);
    const DensityMatrix rho = cgqtest::random_density(2, rng);

    SUBCASE("custom channels have no averaging assignment") {
        EffectiveChannelSpec spec = bns_spec("local-y");
        spec.channel.kind = ChannelKind::Custom;
        CHECK_THROWS_AS(assign_for(spec, rho), invalid_input_error);
        CHECK_THROWS_AS(effective_evolve(spec, rho, 1.0), invalid_input_error);
    }
    SUBCASE("hamiltonian must act on the micro space") {
        EffectiveChannelSpec spec = bns_spec("local-y");
        spec.hamiltonian = HamiltonianSpec::checked(pauli_y(), "y2");
        CHECK_THROWS_AS(effective_evolve(spec, rho, 1.0), invalid_input_error);
    }
    SUBCASE("macro state must match the channel output dimension") {
        const EffectiveChannelSpec spec = bns_spec("local-y");
        const DensityMatrix rho4 =
            DensityMatrix::unchecked(c64{0.25, 0.0} * ComplexMatrix::identity(4));
        CHECK_THROWS_AS(effective_evolve(spec, rho4, 1.0), invalid_input_error);
    }
    SUBCASE("mixing weight must lie in [0, 1]") {
        const EffectiveChannelSpec spec = bns_spec("local-y");
        const DensityMatrix chi = cgqtest::random_density(2, rng);
        CHECK_THROWS_AS(linearity_probe(spec, rho, chi, 1.5, 1.0), invalid_input_error);
        CHECK_THROWS_AS(linearity_probe(spec, rho, chi, -0.1, 1.0), invalid_input_error);
    }
    SUBCASE("joint hamiltonian must match dim_s * dim_e") {
        const HamiltonianSpec h = hamiltonian_preset("global-y");  // dim 4
        CHECK_THROWS_AS(open_system_evolve(h, rho, 3, 1.0), invalid_input_error);
    }
}
