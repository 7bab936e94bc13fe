#include "cgq/channel.hpp"

#include <cmath>

#include "cgq/eig.hpp"
#include "cgq/errors.hpp"

namespace cgq {

CoarseGrainingChannel partial_trace_channel(std::size_t dim_s, std::size_t dim_e) {
    if (dim_s == 0 || dim_e == 0)
        throw invalid_input_error("partial_trace_channel: dimensions must be positive");
    const std::size_t din = dim_s * dim_e;
    CoarseGrainingChannel ch;
    ch.kind = ChannelKind::PartialTraceEnv;
    ch.dim_in = din;
    ch.dim_out = dim_s;
    ch.dim_s = dim_s;
    ch.dim_e = dim_e;
    ch.table.reserve(din * din);
    for (std::size_t i = 0; i < din; ++i)
        for (std::size_t j = 0; j < din; ++j) {
            // tr_E |i><j| = delta_{i_e, j_e} |i_s><j_s|
            ComplexMatrix t(dim_s, dim_s);
            if (i % dim_e == j % dim_e) t.at(i / dim_e, j / dim_e) = 1.0;
            ch.table.push_back(std::move(t));
        }
    return ch;
}

CoarseGrainingChannel bns_channel() {
    CoarseGrainingChannel ch;
    ch.kind = ChannelKind::BlurredSaturated;
    ch.dim_in = 4;
    ch.dim_out = 2;
    ch.table.assign(16, ComplexMatrix(2, 2));
    const double k = 1.0 / std::sqrt(3.0);
    ch.table[0 * 4 + 0].at(0, 0) = 1.0;
    for (std::size_t e = 1; e < 4; ++e) {
        ch.table[0 * 4 + e].at(0, 1) = k;
        ch.table[e * 4 + 0].at(1, 0) = k;
        ch.table[e * 4 + e].at(1, 1) = 1.0;
        // distinct excited pairs |e><e'| map to zero
    }
    return ch;
}

CoarseGrainingChannel custom_channel(std::size_t dim_in, std::size_t dim_out,
                                     std::vector<ComplexMatrix> table) {
    if (dim_in == 0 || dim_out == 0)
        throw invalid_input_error("custom_channel: dimensions must be positive");
    if (table.size() != dim_in * dim_in)
        throw invalid_input_error("custom_channel: table must have dim_in^2 entries");
    for (const auto& t : table)
        if (t.rows() != dim_out || t.cols() != dim_out)
            throw invalid_input_error("custom_channel: table entries must be dim_out x dim_out");
    CoarseGrainingChannel ch;
    ch.kind = ChannelKind::Custom;
    ch.dim_in = dim_in;
    ch.dim_out = dim_out;
    ch.table = std::move(table);
    return ch;
}

ComplexMatrix apply_channel(const CoarseGrainingChannel& ch, const ComplexMatrix& x) {
    if (!x.square() || x.rows() != ch.dim_in)
        throw invalid_input_error("apply_channel: operator dimension must match dim_in");
    ComplexMatrix out(ch.dim_out, ch.dim_out);
    for (std::size_t i = 0; i < ch.dim_in; ++i)
        for (std::size_t j = 0; j < ch.dim_in; ++j) {
            const c64 xij = x.at(i, j);
            if (xij == c64{0.0, 0.0}) continue;
            const ComplexMatrix& t = ch.basis_image(i, j);
            for (std::size_t r = 0; r < ch.dim_out; ++r)
                for (std::size_t c = 0; c < ch.dim_out; ++c)
                    out.at(r, c) += xij * t.at(r, c);
        }
    return out;
}

DensityMatrix apply_channel(const CoarseGrainingChannel& ch, const DensityMatrix& rho) {
    return DensityMatrix::unchecked(apply_channel(ch, rho.mat));
}

ComplexMatrix choi_matrix(const CoarseGrainingChannel& ch) {
    const std::size_t n = ch.dim_in * ch.dim_out;
    ComplexMatrix choi(n, n);
    for (std::size_t i = 0; i < ch.dim_in; ++i)
        for (std::size_t j = 0; j < ch.dim_in; ++j) {
            const ComplexMatrix& t = ch.basis_image(i, j);
            for (std::size_t r = 0; r < ch.dim_out; ++r)
                for (std::size_t c = 0; c < ch.dim_out; ++c)
                    choi.at(i * ch.dim_out + r, j * ch.dim_out + c) = t.at(r, c);
        }
    return choi;
}

CptpReport verify_cptp(const CoarseGrainingChannel& ch, double tol) {
    CptpReport rep;
    const ComplexMatrix choi = choi_matrix(ch);
    rep.choi_hermiticity_defect = hermiticity_defect(choi);
    // Eigenvalues of the Hermitian part; if the Choi has a sizable
    // anti-Hermitian part the channel is not even hermiticity-preserving and
    // cp is refused regardless of the spectrum.
    ComplexMatrix sym(choi.rows(), choi.cols());
    for (std::size_t i = 0; i < choi.rows(); ++i)
        for (std::size_t j = 0; j < choi.cols(); ++j)
            sym.at(i, j) = 0.5 * (choi.at(i, j) + std::conj(choi.at(j, i)));
    const EigResult eig = herm_eig(sym);
    rep.choi_min_eigenvalue = eig.values.front();
    rep.cp = rep.choi_hermiticity_defect <= 100.0 * tol &&
             rep.choi_min_eigenvalue >= -100.0 * tol;

    double defect = 0.0;
    for (std::size_t i = 0; i < ch.dim_in; ++i)
        for (std::size_t j = 0; j < ch.dim_in; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            defect = std::max(defect, std::abs(trace(ch.basis_image(i, j)) - c64{target, 0.0}));
        }
    rep.trace_preservation_defect = defect;
    rep.tp = defect <= tol;
    return rep;
}

} // namespace cgq
