#pragma once

#include <cstddef>
#include <vector>

#include "cgq/complex_matrix.hpp"
#include "cgq/states.hpp"

namespace cgq {

enum class ChannelKind { PartialTraceEnv, BlurredSaturated, Custom };

// A coarse-graining map stored by its action on the computational basis:
// table[i*dim_in + j] = image of |i><j|. Linear extension does the rest, so
// applying the channel never needs Kraus operators.
struct CoarseGrainingChannel {
    ChannelKind kind = ChannelKind::Custom;
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    // For PartialTraceEnv: the factor split of dim_in = dim_s * dim_e.
    std::size_t dim_s = 0;
    std::size_t dim_e = 0;
    std::vector<ComplexMatrix> table;  // dim_in * dim_in entries, each dim_out x dim_out

    const ComplexMatrix& basis_image(std::size_t i, std::size_t j) const {
        return table[i * dim_in + j];
    }
};

// tr_E over the trailing factor of dim_in = dim_s * dim_e.
CoarseGrainingChannel partial_trace_channel(std::size_t dim_s, std::size_t dim_e);

// The blurred-and-saturated detector map, 4 -> 2. The ground basis state
// passes through; the three excited basis states are indistinguishable and
// saturate to |1>; ground-excited coherences survive attenuated by 1/sqrt(3);
// coherences between distinct excited states are erased.
CoarseGrainingChannel bns_channel();

// Arbitrary basis-action table (validated for shape only; use verify_cptp to
// check physicality).
CoarseGrainingChannel custom_channel(std::size_t dim_in, std::size_t dim_out,
                                     std::vector<ComplexMatrix> table);

// Linear extension of the basis action to any operator of matching dimension.
ComplexMatrix apply_channel(const CoarseGrainingChannel& ch, const ComplexMatrix& x);
DensityMatrix apply_channel(const CoarseGrainingChannel& ch, const DensityMatrix& rho);

// sum_ij |i><j| (x) table[i][j], input factor on the slow index.
ComplexMatrix choi_matrix(const CoarseGrainingChannel& ch);

struct CptpReport {
    bool cp = false;
    bool tp = false;
    double choi_hermiticity_defect = 0.0;
    double choi_min_eigenvalue = 0.0;        // CP iff >= -100*tol (and Choi Hermitian)
    double trace_preservation_defect = 0.0;  // max_ij |tr(table[i][j]) - delta_ij|

    bool pass() const { return cp && tp; }
};

CptpReport verify_cptp(const CoarseGrainingChannel& ch, double tol = 1e-12);

} // namespace cgq
