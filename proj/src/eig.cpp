#include "cgq/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cgq/errors.hpp"

namespace cgq {

namespace {

double off_diag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

} // namespace

EigResult herm_eig(const ComplexMatrix& m) {
    if (!m.square()) throw invalid_input_error("herm_eig: matrix must be square");
    if (hermiticity_defect(m) > 1e-9 * std::max(1.0, frobenius_norm(m)))
        throw invalid_input_error("herm_eig: matrix is not Hermitian");

    const std::size_t n = m.rows();
    // Work on the Hermitian average so tiny asymmetries never bias the sweep.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double stop = 1e-14 * std::max(1.0, frobenius_norm(a));

    for (int sweep = 0; sweep < 100 && off_diag_frobenius(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const c64 apq = a.at(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                const c64 phase = apq / r;  // a_pq = r * phase

                // Pick tan(theta) of the smaller rotation that zeroes a_pq.
                const double tau = (a.at(q, q).real() - a.at(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Unitary J: J_pp = c, J_pq = s*phase, J_qp = -s*conj(phase), J_qq = c.
                // Update a <- J^dag a J and v <- v J, touching rows/cols p and q only.
                for (std::size_t k = 0; k < n; ++k) {
                    const c64 akp = a.at(k, p);
                    const c64 akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * std::conj(phase) * akq;
                    a.at(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const c64 apk = a.at(p, k);
                    const c64 aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * phase * aqk;
                    a.at(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const c64 vkp = v.at(k, p);
                    const c64 vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v.at(k, q) = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a.at(i, i).real() < a.at(j, j).real();
    });

    EigResult out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a.at(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, k) = v.at(i, order[k]);
    }
    return out;
}

} // namespace cgq
