#include "cgq/dynamics.hpp"

#include <cstdint>
#include <string>

#include "cgq/errors.hpp"

namespace cgq {

namespace {

void check_spec(const EffectiveChannelSpec& spec, const DensityMatrix& rho) {
    if (spec.hamiltonian.dim() != spec.channel.dim_in)
        throw invalid_input_error("effective dynamics: hamiltonian dimension " +
                                  std::to_string(spec.hamiltonian.dim()) +
                                  " does not match the channel's micro dimension " +
                                  std::to_string(spec.channel.dim_in));
    if (rho.dim() != spec.channel.dim_out)
        throw invalid_input_error("effective dynamics: macro state dimension " +
                                  std::to_string(rho.dim()) +
                                  " does not match the channel's output dimension " +
                                  std::to_string(spec.channel.dim_out));
}

} // namespace

DensityMatrix assign_for(const EffectiveChannelSpec& spec, const DensityMatrix& rho) {
    switch (spec.channel.kind) {
        case ChannelKind::PartialTraceEnv:
            return spec.assigner == AssignerKind::ClosedForm
                       ? assign_partial_trace(rho, spec.channel.dim_e)
                       : mc_average_partial_trace(rho, spec.channel.dim_e, spec.sampler);
        case ChannelKind::BlurredSaturated:
            return spec.assigner == AssignerKind::ClosedForm ? assign_bns(rho)
                                                             : mc_average_bns(rho, spec.sampler);
        case ChannelKind::Custom:
            throw invalid_input_error(
                "assignment: custom channels carry no averaging assignment");
    }
    throw invalid_input_error("assignment: unknown channel kind");
}

DensityMatrix effective_evolve(const EffectiveChannelSpec& spec, const DensityMatrix& rho0,
                               double t) {
    check_spec(spec, rho0);
    const DensityMatrix micro = assign_for(spec, rho0);
    const ComplexMatrix u = unitary_at(spec.hamiltonian, t);
    return apply_channel(spec.channel, DensityMatrix::unchecked(u * micro.mat * adjoint(u)));
}

std::vector<DensityMatrix> effective_evolve_series(const EffectiveChannelSpec& spec,
                                                   const DensityMatrix& rho0,
                                                   const std::vector<double>& ts) {
    check_spec(spec, rho0);
    const DensityMatrix micro = assign_for(spec, rho0);
    const Propagator prop(spec.hamiltonian);

    std::vector<DensityMatrix> out(ts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(ts.size()); ++i) {
        const ComplexMatrix u = prop.at(ts[static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(i)] = apply_channel(
            spec.channel, DensityMatrix::unchecked(u * micro.mat * adjoint(u)));
    }
    return out;
}

DensityMatrix open_system_evolve(const HamiltonianSpec& h_joint, const DensityMatrix& rho0,
                                 std::size_t dim_e, double t) {
    if (dim_e == 0 || h_joint.dim() != rho0.dim() * dim_e)
        throw invalid_input_error("open_system_evolve: joint hamiltonian must act on dim_s*dim_e");
    EffectiveChannelSpec spec{partial_trace_channel(rho0.dim(), dim_e), h_joint,
                              AssignerKind::ClosedForm, SamplerConfig{}};
    return effective_evolve(spec, rho0, t);
}

std::vector<DensityMatrix> open_system_evolve_series(const HamiltonianSpec& h_joint,
                                                     const DensityMatrix& rho0,
                                                     std::size_t dim_e,
                                                     const std::vector<double>& ts) {
    if (dim_e == 0 || h_joint.dim() != rho0.dim() * dim_e)
        throw invalid_input_error("open_system_evolve: joint hamiltonian must act on dim_s*dim_e");
    EffectiveChannelSpec spec{partial_trace_channel(rho0.dim(), dim_e), h_joint,
                              AssignerKind::ClosedForm, SamplerConfig{}};
    return effective_evolve_series(spec, rho0, ts);
}

double linearity_probe(const EffectiveChannelSpec& spec, const DensityMatrix& rho,
                       const DensityMatrix& chi, double alpha, double t) {
    if (alpha < 0.0 || alpha > 1.0)
        throw invalid_input_error("linearity_probe: alpha must lie in [0, 1]");
    if (rho.dim() != chi.dim())
        throw invalid_input_error("linearity_probe: states must share a dimension");
    ComplexMatrix mix = rho.mat;
    mix *= c64{alpha, 0.0};
    ComplexMatrix rest = chi.mat;
    rest *= c64{1.0 - alpha, 0.0};
    mix += rest;

    const DensityMatrix lhs = effective_evolve(spec, DensityMatrix::unchecked(mix), t);
    const DensityMatrix gr = effective_evolve(spec, rho, t);
    const DensityMatrix gc = effective_evolve(spec, chi, t);

    ComplexMatrix expect = gr.mat;
    expect *= c64{alpha, 0.0};
    ComplexMatrix gc_scaled = gc.mat;
    gc_scaled *= c64{1.0 - alpha, 0.0};
    expect += gc_scaled;

    return max_abs_diff(lhs.mat, expect);
}

} // namespace cgq
