#pragma once

#include <array>
#include <cstdint>

#include "cgq/complex_matrix.hpp"
#include "cgq/states.hpp"

namespace cgq {

// Macro -> micro averaging assignment for the partial-trace channel:
// rho (x) I/dim_e. Linear, and tr_E recovers rho exactly.
DensityMatrix assign_partial_trace(const DensityMatrix& rho, std::size_t dim_e);

// Macro -> micro averaging assignment for the blurred-and-saturated channel
// (qubit in, two-qubit out). In terms of the macro entries:
//   - ground population rho00 passes through to |00><00|;
//   - ground-excited coherences spread as rho01/sqrt(3) over the three
//     excited columns;
//   - the excited populations split evenly, rho11/3 each;
//   - excited-excited coherences carry the nonlinearity:
//     |rho01|^2/(2 rho00) - rho11/6, with the 0/0 -> 0 rule at rho00 = 0.
// The output is the uniform average over all pure micro states the channel
// maps to rho, which is why the map fails to be linear in rho.
DensityMatrix assign_bns(const DensityMatrix& rho);

// One representative of the compatible set Omega(rho) for the BnS channel,
// written in the split-real parametrization: amplitudes c_j = a_j + i b_j
// with c_0 = a00 + i b00 and the excited triples a, b. The compatible set is
// the orbit of this seed under independent rotations of a and b about the
// symmetric axis (1,1,1)/sqrt(3).
struct OrbitSeed {
    double a00 = 0.0;
    double b00 = 0.0;
    std::array<double, 3> a{};
    std::array<double, 3> b{};
};

// Canonical seed: b00 = 0, the pinned components (s_a/3, s_b/3)(1,1,1) from
// the coherence constraint, and the free radial norm placed entirely in the
// a-triple along (1,-1,0)/sqrt(2). Throws infeasible_error when the
// compatible set is empty (only possible for non-positive inputs).
OrbitSeed canonical_orbit_seed(const DensityMatrix& rho, double tol = 1e-12);

// Alternative valid seeds for the same rho: the free radial norm R is split
// between the a- and b-triples as (R cos(split), R sin(split)), pointing
// along in-plane directions at azimuths phi_a / phi_b within the plane
// orthogonal to (1,1,1). canonical_orbit_seed(rho) == orbit_seed_with(rho,0,0,0).
OrbitSeed orbit_seed_with(const DensityMatrix& rho, double phi_a, double phi_b,
                          double split, double tol = 1e-12);

// The orbit point O(theta, phi) applied to a seed: rotates the a-triple by
// theta and the b-triple by phi about (1,1,1)/sqrt(3).
PureStateVector orbit_state(const OrbitSeed& seed, double theta, double phi);

// Same, writing the four amplitudes into a caller-owned buffer (the sampler's
// inner loop calls this millions of times).
void orbit_state_into(const OrbitSeed& seed, double theta, double phi, std::vector<c64>& amp);

struct SamplerConfig {
    std::uint64_t sample_count = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk_size = 65'536;
};

// Monte-Carlo estimates of the averaging assignments, for cross-checking the
// closed forms. The estimator averages projectors of states drawn from the
// compatible set: uniform (theta, phi) orbit points for BnS, Haar-random
// environment unitaries acting on a purification for the partial trace.
// Deterministic for fixed (config.seed, sample_count, chunk_size): sample k
// draws from a substream derived from (seed, k), chunks accumulate with
// compensated sums, and chunk partials reduce in index order — so results are
// bit-identical across thread counts. The _serial twins are the reference
// implementations the parallel paths are tested against.
DensityMatrix mc_average_bns(const DensityMatrix& rho, const SamplerConfig& cfg);
DensityMatrix mc_average_bns_serial(const DensityMatrix& rho, const SamplerConfig& cfg);
// Orbit average started from an explicit seed rather than the canonical one;
// the result must not depend on which valid seed of the same rho is used.
DensityMatrix mc_average_orbit(const OrbitSeed& seed, const SamplerConfig& cfg);
DensityMatrix mc_average_orbit_serial(const OrbitSeed& seed, const SamplerConfig& cfg);
DensityMatrix mc_average_partial_trace(const DensityMatrix& rho, std::size_t dim_e,
                                       const SamplerConfig& cfg);
DensityMatrix mc_average_partial_trace_serial(const DensityMatrix& rho, std::size_t dim_e,
                                              const SamplerConfig& cfg);

} // namespace cgq
