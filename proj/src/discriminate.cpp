#include "cgq/discriminate.hpp"

#include <cstdint>

#include "cgq/channel.hpp"
#include "cgq/errors.hpp"

namespace cgq {

double helstrom_success(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * (1.0 + trace_distance(a, b));
}

std::vector<double> time_grid(double t_min, double t_max, std::size_t steps) {
    if (steps == 0) throw invalid_input_error("time_grid: steps must be >= 1");
    if (t_max < t_min) throw invalid_input_error("time_grid: t_max must be >= t_min");
    std::vector<double> ts(steps);
    if (steps == 1) {
        ts[0] = t_min;
        return ts;
    }
    const double dt = (t_max - t_min) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) ts[i] = t_min + dt * static_cast<double>(i);
    return ts;
}

TraceSeries run_discrimination(const DiscriminationExperiment& ex) {
    if (ex.rho0.dim() != ex.chi0.dim())
        throw invalid_input_error("discrimination: states must share a dimension");
    if (ex.ts.empty()) throw invalid_input_error("discrimination: empty time grid");

    const DensityMatrix micro_rho = assign_for(ex.spec, ex.rho0);
    const DensityMatrix micro_chi = assign_for(ex.spec, ex.chi0);
    const Propagator prop(ex.spec.hamiltonian);

    TraceSeries out;
    out.ts = ex.ts;
    out.d_initial = trace_distance(ex.rho0, ex.chi0);
    out.d_micro = trace_distance(micro_rho, micro_chi);
    out.d_effective.resize(ex.ts.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ex.ts.size()); ++i) {
        const std::size_t idx = static_cast<std::size_t>(i);
        const ComplexMatrix u = prop.at(ex.ts[idx]);
        const ComplexMatrix udag = adjoint(u);
        const ComplexMatrix ga = apply_channel(ex.spec.channel, u * micro_rho.mat * udag);
        const ComplexMatrix gb = apply_channel(ex.spec.channel, u * micro_chi.mat * udag);
        out.d_effective[idx] = trace_distance(ga, gb);
    }
    return out;
}

} // namespace cgq
