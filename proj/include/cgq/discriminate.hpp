#pragma once

#include <vector>

#include "cgq/dynamics.hpp"
#include "cgq/states.hpp"

namespace cgq {

// Optimal single-shot success probability for distinguishing two equally
// likely states: (1 + D(a, b)) / 2.
double helstrom_success(const DensityMatrix& a, const DensityMatrix& b);

// Inclusive uniform grid; steps == 1 collapses to {t_min}.
std::vector<double> time_grid(double t_min, double t_max, std::size_t steps);

// Two macro states, one effective dynamics, one time grid: how well can the
// pair be told apart through the coarse-grained evolution?
struct DiscriminationExperiment {
    DensityMatrix rho0;
    DensityMatrix chi0;
    EffectiveChannelSpec spec;
    std::vector<double> ts;
};

struct TraceSeries {
    std::vector<double> ts;
    std::vector<double> d_effective;  // D(Gamma_t[rho0], Gamma_t[chi0]) per grid point
    double d_initial = 0.0;           // D(rho0, chi0)
    double d_micro = 0.0;             // D(A[rho0], A[chi0]): the data-processing ceiling
};

// Assigns both states once, then sweeps the grid (in parallel, index-addressed
// writes). The effective distance can exceed d_initial — the assignment is not
// a channel in the macro -> micro direction — but never d_micro, because
// channel . conj(U_t) is CPTP.
TraceSeries run_discrimination(const DiscriminationExperiment& ex);

} // namespace cgq
