#include <cstdint>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "cgq/cli.hpp"
#include "cgq/errors.hpp"

namespace {

struct SeedFlag {
    std::optional<std::uint64_t> value;
};

void add_common(CLI::App* cmd, cgq::CommonOptions& common, SeedFlag& seed) {
    cmd->add_option("--channel", common.channel, "Coarse-graining channel: bns or partial-trace")
        ->capture_default_str();
    cmd->add_option("--dim-e", common.dim_e, "Environment dimension (partial-trace channel)")
        ->capture_default_str();
    cmd->add_option("--tol", common.tol, "Validation tolerance")->capture_default_str();
    cmd->add_flag_callback(
        "--no-validate", [&common] { common.validate = false; },
        "Skip density-matrix validation of input states");
    cmd->add_option("--samples", common.samples, "Monte-Carlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", [&seed](const CLI::results_t& res) {
            std::uint64_t v = 0;
            if (!CLI::detail::lexical_cast(res[0], v)) return false;
            seed.value = v;
            return true;
        },
        "RNG seed (default: CGQ_SEED environment variable, else 0)")
        ->expected(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coarse-grained quantum dynamics toolkit"};
    app.require_subcommand(1);

    cgq::AssignOptions assign;
    cgq::EvolveOptions evolve;
    cgq::DiscriminateOptions discriminate;
    cgq::VerifyOptions verify;
    SeedFlag assign_seed, evolve_seed, discriminate_seed, verify_seed;

    CLI::App* a = app.add_subcommand(
        "assign", "Average micro state assigned to a macro state, plus a validation report");
    a->add_option("state", assign.state_path, "Macro state JSON file")->required();
    add_common(a, assign.common, assign_seed);
    a->add_flag("--mc", assign.mc, "Also run the Monte-Carlo estimator and report the gap");
    a->add_option("--out", assign.out, "Output JSON path (default: stdout)");

    CLI::App* e = app.add_subcommand(
        "evolve", "Effective macro trajectory under the coarse-grained dynamics");
    e->add_option("state", evolve.state_path, "Initial macro state JSON file")->required();
    add_common(e, evolve.common, evolve_seed);
    e->add_option("--hamiltonian", evolve.hamiltonian,
                  "Micro Hamiltonian: local-y, global-y, or a matrix JSON file")
        ->capture_default_str();
    e->add_option("--t-min", evolve.t_min, "Grid start (dimensionless omega*t)")
        ->capture_default_str();
    e->add_option("--t-max", evolve.t_max, "Grid end")->capture_default_str();
    e->add_option("--steps", evolve.steps, "Grid point count (inclusive endpoints)")
        ->capture_default_str();
    e->add_flag("--mc", evolve.mc, "Use the Monte-Carlo assignment leg");
    e->add_option("--out", evolve.out, "Output CSV path")->required();

    CLI::App* d = app.add_subcommand(
        "discriminate", "State-discrimination distances through the effective dynamics");
    d->add_option("rho", discriminate.rho_path, "First macro state JSON file")->required();
    d->add_option("chi", discriminate.chi_path, "Second macro state JSON file")->required();
    add_common(d, discriminate.common, discriminate_seed);
    d->add_option("--hamiltonian", discriminate.hamiltonian,
                  "Micro Hamiltonian: local-y, global-y, or a matrix JSON file")
        ->capture_default_str();
    d->add_option("--t-min", discriminate.t_min, "Grid start")->capture_default_str();
    d->add_option("--t-max", discriminate.t_max, "Grid end")->capture_default_str();
    d->add_option("--steps", discriminate.steps, "Grid point count")->capture_default_str();
    d->add_flag("--mc", discriminate.mc, "Use the Monte-Carlo assignment leg");
    d->add_option("--out", discriminate.out, "Output CSV path")->required();
    d->add_option("--summary", discriminate.summary,
                  "Summary JSON path (default: CSV path with .json extension)");

    CLI::App* v = app.add_subcommand(
        "verify", "Channel and assignment verification battery (exit 1 on failure)");
    add_common(v, verify.common, verify_seed);
    v->add_option("--dim-s", verify.dim_s, "Macro dimension for the partial-trace battery")
        ->capture_default_str();
    v->add_option("--out", verify.out, "Optional JSON report path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (a->parsed()) {
            assign.common.seed = cgq::resolve_seed(assign_seed.value);
            return cgq::run_assign(assign);
        }
        if (e->parsed()) {
            evolve.common.seed = cgq::resolve_seed(evolve_seed.value);
            return cgq::run_evolve(evolve);
        }
        if (d->parsed()) {
            discriminate.common.seed = cgq::resolve_seed(discriminate_seed.value);
            return cgq::run_discriminate(discriminate);
        }
        if (v->parsed()) {
            verify.common.seed = cgq::resolve_seed(verify_seed.value);
            return cgq::run_verify(verify);
        }
    } catch (const cgq::invalid_input_error& err) {
        std::cerr << "error: " << err.what() << '\n';
        return cgq::kExitInvalidInput;
    }
    std::cerr << "error: no subcommand\n";
    return cgq::kExitInvalidInput;
}
