#include "cgq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "json.hpp"

#include "cgq/assignment.hpp"
#include "cgq/channel.hpp"
#include "cgq/discriminate.hpp"
#include "cgq/dynamics.hpp"
#include "cgq/errors.hpp"
#include "cgq/io.hpp"
#include "cgq/sampler.hpp"
#include "cgq/states.hpp"

namespace cgq {

namespace {

using nlohmann::json;

template <typename F>
int guarded(F&& body) noexcept {
    try {
        return body();
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const invalid_input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

CoarseGrainingChannel make_channel(const CommonOptions& common, std::size_t dim_s) {
    if (common.channel == "bns") {
        if (dim_s != 2)
            throw invalid_input_error("the bns channel coarse-grains to a qubit; got a macro "
                                      "state of dimension " +
                                      std::to_string(dim_s));
        return bns_channel();
    }
    if (common.channel == "partial-trace") {
        if (common.dim_e == 0) throw invalid_input_error("--dim-e must be >= 1");
        return partial_trace_channel(dim_s, common.dim_e);
    }
    throw invalid_input_error("unknown channel '" + common.channel +
                              "' (expected bns or partial-trace)");
}

HamiltonianSpec resolve_hamiltonian(const std::string& name_or_path, std::size_t expect_dim) {
    HamiltonianSpec h = [&] {
        if (name_or_path == "local-y" || name_or_path == "global-y")
            return hamiltonian_preset(name_or_path);
        return HamiltonianSpec::checked(read_state_matrix(name_or_path), name_or_path);
    }();
    if (h.dim() != expect_dim)
        throw invalid_input_error("hamiltonian '" + h.label + "' has dimension " +
                                  std::to_string(h.dim()) + " but the micro space has dimension " +
                                  std::to_string(expect_dim));
    return h;
}

DensityMatrix load_macro_state(const std::string& path, const CommonOptions& common) {
    ComplexMatrix m = read_state_matrix(path);
    if (!common.validate) return DensityMatrix::unchecked(std::move(m));
    const ValidationReport rep = validate_density(m, common.tol);
    if (!rep.pass)
        throw invalid_input_error("state file '" + path +
                                  "' fails validation (hermiticity defect " +
                                  format_double(rep.hermiticity_defect) + ", trace defect " +
                                  format_double(rep.trace_defect) + ", min eigenvalue " +
                                  format_double(rep.min_eigenvalue) + ")");
    return DensityMatrix::unchecked(std::move(m));
}

SamplerConfig sampler_config(const CommonOptions& common) {
    SamplerConfig cfg;
    cfg.sample_count = common.samples;
    cfg.seed = common.seed;
    return cfg;
}

json validation_json(const ValidationReport& rep) {
    return json{{"pass", rep.pass},
                {"hermiticity_defect", rep.hermiticity_defect},
                {"trace_defect", rep.trace_defect},
                {"min_eigenvalue", rep.min_eigenvalue}};
}

DensityMatrix closed_form_assignment(const CoarseGrainingChannel& ch, const DensityMatrix& rho) {
    switch (ch.kind) {
        case ChannelKind::PartialTraceEnv:
            return assign_partial_trace(rho, ch.dim_e);
        case ChannelKind::BlurredSaturated:
            return assign_bns(rho);
        case ChannelKind::Custom:
            break;
    }
    throw invalid_input_error("assignment: custom channels carry no averaging assignment");
}

DensityMatrix mc_assignment(const CoarseGrainingChannel& ch, const DensityMatrix& rho,
                            const SamplerConfig& cfg) {
    switch (ch.kind) {
        case ChannelKind::PartialTraceEnv:
            return mc_average_partial_trace(rho, ch.dim_e, cfg);
        case ChannelKind::BlurredSaturated:
            return mc_average_bns(rho, cfg);
        case ChannelKind::Custom:
            break;
    }
    throw invalid_input_error("assignment: custom channels carry no averaging assignment");
}

std::string default_summary_path(const std::string& csv_path) {
    std::filesystem::path p(csv_path);
    p.replace_extension(".json");
    return p.string();
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input_error("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

// Deterministic little battery of macro states for the verify subcommand:
// basis projectors, the maximally mixed state, and seeded Wishart draws.
std::vector<DensityMatrix> verify_battery(std::size_t dim, std::uint64_t seed) {
    std::vector<DensityMatrix> states;
    for (std::size_t k = 0; k < dim; ++k) {
        ComplexMatrix m(dim, dim);
        m.at(k, k) = 1.0;
        states.push_back(DensityMatrix::unchecked(std::move(m)));
    }
    ComplexMatrix mixed = ComplexMatrix::identity(dim);
    mixed *= c64{1.0 / static_cast<double>(dim), 0.0};
    states.push_back(DensityMatrix::unchecked(std::move(mixed)));
    if (dim == 2) {
        ComplexMatrix plus(2, 2);
        plus.at(0, 0) = plus.at(0, 1) = plus.at(1, 0) = plus.at(1, 1) = 0.5;
        states.push_back(DensityMatrix::unchecked(std::move(plus)));
    }

    SplitMix64 rng(seed ^ 0xC0A45E17B3ULL);
    for (int draw = 0; draw < 16; ++draw) {
        ComplexMatrix g(dim, dim);
        for (auto& x : g.data()) {
            double re, im;
            rng.gaussian_pair(re, im);
            x = c64{re, im};
        }
        ComplexMatrix w = g * adjoint(g);
        const double tr = trace(w).real();
        w *= c64{1.0 / tr, 0.0};
        states.push_back(DensityMatrix::unchecked(std::move(w)));
    }
    return states;
}

} // namespace

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_value) {
    if (flag_value) return *flag_value;
    const char* env = std::getenv("CGQ_SEED");
    if (!env || !*env) return 0;
    std::uint64_t value = 0;
    const char* end = env;
    while (*end) ++end;
    const auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end)
        throw invalid_input_error(std::string("CGQ_SEED is not an unsigned integer: '") + env +
                                  "'");
    return value;
}

int run_assign(const AssignOptions& opt) noexcept {
    return guarded([&] {
        const DensityMatrix rho = load_macro_state(opt.state_path, opt.common);
        const ValidationReport input_rep = validate_density(rho.mat, opt.common.tol);
        const CoarseGrainingChannel ch = make_channel(opt.common, rho.dim());

        const DensityMatrix micro = closed_form_assignment(ch, rho);
        const ValidationReport output_rep = validate_density(micro.mat, opt.common.tol);
        // The channel must take the assignment back to the macro state.
        const double roundtrip = max_abs_diff(apply_channel(ch, micro).mat, rho.mat);

        json report{{"channel", opt.common.channel},
                    {"input_validation", validation_json(input_rep)},
                    {"output_validation", validation_json(output_rep)},
                    {"roundtrip_defect", roundtrip}};
        if (ch.kind == ChannelKind::PartialTraceEnv) report["dim_e"] = ch.dim_e;

        if (opt.mc) {
            const SamplerConfig cfg = sampler_config(opt.common);
            const DensityMatrix est = mc_assignment(ch, rho, cfg);
            report["mc"] = json{{"samples", cfg.sample_count},
                                {"seed", cfg.seed},
                                {"max_entry_deviation", max_abs_diff(est.mat, micro.mat)}};
        }

        json out{{"micro_state", json::parse(state_matrix_json(micro.mat))},
                 {"report", std::move(report)}};
        if (opt.out.empty()) {
            std::cout << out.dump(2) << '\n';
        } else {
            write_json_file(opt.out, out);
            std::cout << "assignment written to " << opt.out << '\n';
        }
        return kExitOk;
    });
}

int run_evolve(const EvolveOptions& opt) noexcept {
    return guarded([&] {
        const DensityMatrix rho0 = load_macro_state(opt.state_path, opt.common);
        if (rho0.dim() != 2)
            throw invalid_input_error("evolve writes qubit trajectories; got a macro state of "
                                      "dimension " +
                                      std::to_string(rho0.dim()));
        const CoarseGrainingChannel ch = make_channel(opt.common, rho0.dim());
        EffectiveChannelSpec spec{ch, resolve_hamiltonian(opt.hamiltonian, ch.dim_in),
                                  opt.mc ? AssignerKind::MonteCarlo : AssignerKind::ClosedForm,
                                  sampler_config(opt.common)};

        const std::vector<double> ts = time_grid(opt.t_min, opt.t_max, opt.steps);
        const std::vector<DensityMatrix> series = effective_evolve_series(spec, rho0, ts);

        CsvWriter csv(opt.out);
        csv.header({"t", "rho00", "re_rho01", "im_rho01", "rho11"});
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const ComplexMatrix& m = series[i].mat;
            csv.row({ts[i], m.at(0, 0).real(), m.at(0, 1).real(), m.at(0, 1).imag(),
                     m.at(1, 1).real()});
        }
        std::cout << "wrote " << ts.size() << " rows to " << opt.out << '\n';
        return kExitOk;
    });
}

int run_discriminate(const DiscriminateOptions& opt) noexcept {
    return guarded([&] {
        DiscriminationExperiment ex{load_macro_state(opt.rho_path, opt.common),
                                    load_macro_state(opt.chi_path, opt.common),
                                    EffectiveChannelSpec{},
                                    time_grid(opt.t_min, opt.t_max, opt.steps)};
        const CoarseGrainingChannel ch = make_channel(opt.common, ex.rho0.dim());
        ex.spec = EffectiveChannelSpec{
            ch, resolve_hamiltonian(opt.hamiltonian, ch.dim_in),
            opt.mc ? AssignerKind::MonteCarlo : AssignerKind::ClosedForm,
            sampler_config(opt.common)};

        const TraceSeries series = run_discrimination(ex);

        CsvWriter csv(opt.out);
        csv.header({"omega_t", "d_effective", "d_initial", "d_micro"});
        for (std::size_t i = 0; i < series.ts.size(); ++i)
            csv.row({series.ts[i], series.d_effective[i], series.d_initial, series.d_micro});

        std::size_t imax = 0;
        for (std::size_t i = 1; i < series.d_effective.size(); ++i)
            if (series.d_effective[i] > series.d_effective[imax]) imax = i;
        double bound_excess = 0.0;
        for (double d : series.d_effective)
            bound_excess = std::max(bound_excess, d - series.d_micro);

        const json summary{{"d_initial", series.d_initial},
                           {"d_micro", series.d_micro},
                           {"d_effective_max", series.d_effective[imax]},
                           {"t_at_max", series.ts[imax]},
                           {"exceeds_initial", series.d_effective[imax] > series.d_initial},
                           {"bound_excess", bound_excess},
                           {"helstrom_success_initial", 0.5 * (1.0 + series.d_initial)},
                           {"helstrom_success_max", 0.5 * (1.0 + series.d_effective[imax])}};
        const std::string summary_path =
            opt.summary.empty() ? default_summary_path(opt.out) : opt.summary;
        write_json_file(summary_path, summary);

        std::cout << "wrote " << series.ts.size() << " rows to " << opt.out << "\n"
                  << "summary (" << summary_path << "): d_initial "
                  << format_double(series.d_initial) << ", d_micro "
                  << format_double(series.d_micro) << ", max d_effective "
                  << format_double(series.d_effective[imax]) << " at t "
                  << format_double(series.ts[imax]) << '\n';
        return kExitOk;
    });
}

int run_verify(const VerifyOptions& opt) noexcept {
    return guarded([&] {
        const CoarseGrainingChannel ch = make_channel(opt.common, opt.dim_s);
        const double tol = opt.common.tol;
        json checks = json::array();
        bool all_pass = true;

        const auto record = [&](const std::string& name, bool pass, double value) {
            std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << " (" << format_double(value)
                      << ")\n";
            checks.push_back(json{{"name", name}, {"pass", pass}, {"value", value}});
            all_pass = all_pass && pass;
        };

        const CptpReport cptp = verify_cptp(ch, tol);
        record("channel is completely positive (min Choi eigenvalue)", cptp.cp,
               cptp.choi_min_eigenvalue);
        record("channel is trace preserving (max trace defect)", cptp.tp,
               cptp.trace_preservation_defect);

        const std::vector<DensityMatrix> battery = verify_battery(ch.dim_out, opt.common.seed);
        double worst_roundtrip = 0.0;
        double worst_herm = 0.0;
        double worst_trace = 0.0;
        double worst_eig = 0.0;
        for (const DensityMatrix& rho : battery) {
            const DensityMatrix micro = closed_form_assignment(ch, rho);
            worst_roundtrip =
                std::max(worst_roundtrip, max_abs_diff(apply_channel(ch, micro).mat, rho.mat));
            const ValidationReport rep = validate_density(micro.mat, tol);
            worst_herm = std::max(worst_herm, rep.hermiticity_defect);
            worst_trace = std::max(worst_trace, rep.trace_defect);
            worst_eig = std::min(worst_eig, rep.min_eigenvalue);
        }
        record("assignment then channel returns the macro state (max defect)",
               worst_roundtrip <= tol, worst_roundtrip);
        record("assigned micro states are valid (worst hermiticity defect)", worst_herm <= tol,
               worst_herm);
        record("assigned micro states are valid (worst trace defect)", worst_trace <= tol,
               worst_trace);
        record("assigned micro states are valid (min eigenvalue)", worst_eig >= -100.0 * tol,
               worst_eig);

        if (ch.kind == ChannelKind::BlurredSaturated) {
            // alpha = 1/2 mix of |+><+| and |0><0|: the assignment's excited
            // coherences disagree with the mixed assignments by exactly 1/12.
            ComplexMatrix plus(2, 2);
            plus.at(0, 0) = plus.at(0, 1) = plus.at(1, 0) = plus.at(1, 1) = 0.5;
            ComplexMatrix ground(2, 2);
            ground.at(0, 0) = 1.0;
            ComplexMatrix mix = plus;
            mix *= c64{0.5, 0.0};
            ComplexMatrix g2 = ground;
            g2 *= c64{0.5, 0.0};
            mix += g2;
            const ComplexMatrix direct =
                closed_form_assignment(ch, DensityMatrix::unchecked(mix)).mat;
            ComplexMatrix averaged =
                closed_form_assignment(ch, DensityMatrix::unchecked(plus)).mat;
            averaged *= c64{0.5, 0.0};
            ComplexMatrix part =
                closed_form_assignment(ch, DensityMatrix::unchecked(ground)).mat;
            part *= c64{0.5, 0.0};
            averaged += part;
            const double witness = max_abs_diff(direct, averaged);
            record("assignment is nonlinear (witness deviation >= 1e-3)", witness >= 1e-3,
                   witness);
        } else {
            DensityMatrix a = battery.front();
            const DensityMatrix& b = battery.back();
            ComplexMatrix mix = a.mat;
            mix *= c64{0.5, 0.0};
            ComplexMatrix part = b.mat;
            part *= c64{0.5, 0.0};
            mix += part;
            ComplexMatrix averaged = closed_form_assignment(ch, a).mat;
            averaged *= c64{0.5, 0.0};
            ComplexMatrix bp = closed_form_assignment(ch, b).mat;
            bp *= c64{0.5, 0.0};
            averaged += bp;
            const double defect = max_abs_diff(
                closed_form_assignment(ch, DensityMatrix::unchecked(mix)).mat, averaged);
            record("assignment is linear (max defect)", defect <= tol, defect);
        }

        if (!opt.out.empty())
            write_json_file(opt.out, json{{"channel", opt.common.channel},
                                          {"pass", all_pass},
                                          {"checks", std::move(checks)}});
        std::cout << (all_pass ? "verification passed\n" : "verification FAILED\n");
        return all_pass ? kExitOk : kExitVerificationFailed;
    });
}

} // namespace cgq
