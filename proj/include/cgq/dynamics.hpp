#pragma once

#include <vector>

#include "cgq/assignment.hpp"
#include "cgq/channel.hpp"
#include "cgq/states.hpp"

namespace cgq {

// How the macro -> micro leg of the effective dynamics is computed: the
// closed-form assignment maps, or their Monte-Carlo estimators (same physics,
// statistical error — useful as a cross-check and stress path).
enum class AssignerKind { ClosedForm, MonteCarlo };

// Everything needed to form the effective map
//   Gamma_t = channel . conj(U_t) . assignment,
// i.e. assign the macro state up to the micro space, evolve it unitarily
// there, and coarse-grain back down.
struct EffectiveChannelSpec {
    CoarseGrainingChannel channel;
    HamiltonianSpec hamiltonian;  // acts on the micro space (dim == channel.dim_in)
    AssignerKind assigner = AssignerKind::ClosedForm;
    SamplerConfig sampler;  // only read when assigner == MonteCarlo
};

// The assignment leg on its own. Dispatches on the channel kind; custom
// channels have no averaging assignment and are rejected.
DensityMatrix assign_for(const EffectiveChannelSpec& spec, const DensityMatrix& rho);

// Gamma_t applied to one macro state at one time.
DensityMatrix effective_evolve(const EffectiveChannelSpec& spec, const DensityMatrix& rho0,
                               double t);

// Gamma_t over a time grid. The assignment and the Hamiltonian
// eigendecomposition are computed once; grid points then evaluate
// independently (and in parallel), writing results by index.
std::vector<DensityMatrix> effective_evolve_series(const EffectiveChannelSpec& spec,
                                                   const DensityMatrix& rho0,
                                                   const std::vector<double>& ts);

// Reduced dynamics of an open system: tr_E[U_t (rho0 (x) I/dim_e) U_t^dag],
// the partial-trace specialization of the effective dynamics above.
DensityMatrix open_system_evolve(const HamiltonianSpec& h_joint, const DensityMatrix& rho0,
                                 std::size_t dim_e, double t);
std::vector<DensityMatrix> open_system_evolve_series(const HamiltonianSpec& h_joint,
                                                     const DensityMatrix& rho0,
                                                     std::size_t dim_e,
                                                     const std::vector<double>& ts);

// Max-entry deviation of Gamma_t from linearity on the segment between rho
// and chi: || Gamma_t[mix] - (alpha Gamma_t[rho] + (1-alpha) Gamma_t[chi]) ||_max.
// Zero (to roundoff) for the partial-trace channel; genuinely nonzero for BnS.
double linearity_probe(const EffectiveChannelSpec& spec, const DensityMatrix& rho,
                       const DensityMatrix& chi, double alpha, double t);

} // namespace cgq
