#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace cgq {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInfeasible = 3;

// Options common to all subcommands. seed is resolved by the parser from
// --seed or the CGQ_SEED environment variable (flag wins), defaulting to 0.
struct CommonOptions {
    std::string channel = "bns";  // "bns" | "partial-trace"
    std::size_t dim_e = 2;        // environment dimension for partial-trace
    double tol = 1e-12;
    bool validate = true;  // --no-validate clears this
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

struct AssignOptions {
    CommonOptions common;
    std::string state_path;
    bool mc = false;  // also run the Monte-Carlo estimator and report the gap
    std::string out;  // JSON (micro state + report); empty = stdout only
};

struct EvolveOptions {
    CommonOptions common;
    std::string state_path;
    std::string hamiltonian = "local-y";  // preset name or state-matrix JSON path
    double t_min = 0.0;
    double t_max = 6.283185307179586476925286766559;  // 2*pi
    std::size_t steps = 200;
    bool mc = false;  // Monte-Carlo assignment leg
    std::string out;  // CSV: t,rho00,re_rho01,im_rho01,rho11
};

struct DiscriminateOptions {
    CommonOptions common;
    std::string rho_path;
    std::string chi_path;
    std::string hamiltonian = "global-y";
    double t_min = 0.0;
    double t_max = 6.283185307179586476925286766559;
    std::size_t steps = 400;
    bool mc = false;
    std::string out;      // CSV: omega_t,d_effective,d_initial,d_micro
    std::string summary;  // JSON summary; empty = out with extension '.json'
};

struct VerifyOptions {
    CommonOptions common;
    std::size_t dim_s = 2;  // macro dimension for the partial-trace battery
    std::string out;        // optional JSON report
};

// Each runner executes one subcommand end to end and returns a process exit
// code; failures are reported on stderr rather than thrown.
int run_assign(const AssignOptions& opt) noexcept;
int run_evolve(const EvolveOptions& opt) noexcept;
int run_discriminate(const DiscriminateOptions& opt) noexcept;
int run_verify(const VerifyOptions& opt) noexcept;

// --seed beats CGQ_SEED beats 0. Throws invalid_input_error when the
// environment variable is set but not a plain unsigned integer.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_value);

} // namespace cgq
