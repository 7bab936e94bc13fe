#include "cgq/states.hpp"

#include <cmath>
#include <utility>

#include "cgq/errors.hpp"

namespace cgq {

namespace {

ComplexMatrix symmetrized(const ComplexMatrix& m) {
    ComplexMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    return s;
}

} // namespace

ValidationReport validate_density(const ComplexMatrix& m, double tol) {
    if (!m.square() || m.rows() == 0)
        throw invalid_input_error("validate_density: matrix must be square and non-empty");
    ValidationReport rep;
    rep.hermiticity_defect = hermiticity_defect(m);
    rep.trace_defect = std::abs(trace(m) - c64{1.0, 0.0});
    const EigResult eig = herm_eig(symmetrized(m));
    rep.min_eigenvalue = eig.values.front();
    rep.pass = rep.hermiticity_defect <= tol && rep.trace_defect <= tol &&
               rep.min_eigenvalue >= -100.0 * tol;
    return rep;
}

DensityMatrix DensityMatrix::checked(ComplexMatrix m, double tol) {
    const ValidationReport rep = validate_density(m, tol);
    if (!rep.pass)
        throw invalid_input_error(
            "not a density matrix (hermiticity defect " + std::to_string(rep.hermiticity_defect) +
            ", trace defect " + std::to_string(rep.trace_defect) +
            ", min eigenvalue " + std::to_string(rep.min_eigenvalue) + ")");
    return DensityMatrix{std::move(m)};
}

double PureStateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

ComplexMatrix PureStateVector::projector() const {
    ComplexMatrix p(amp.size(), amp.size());
    for (std::size_t i = 0; i < amp.size(); ++i)
        for (std::size_t j = 0; j < amp.size(); ++j)
            p.at(i, j) = amp[i] * std::conj(amp[j]);
    return p;
}

PureStateVector canonicalize(PureStateVector psi, double tol) {
    const double n = psi.norm();
    if (n <= tol) throw invalid_input_error("canonicalize: zero state vector");
    for (auto& a : psi.amp) a /= n;
    for (const auto& a : psi.amp) {
        const double mag = std::abs(a);
        if (mag > tol) {
            const c64 phase = a / mag;
            for (auto& b : psi.amp) b /= phase;
            break;
        }
    }
    psi.canonical_phase = true;
    return psi;
}

HamiltonianSpec HamiltonianSpec::checked(ComplexMatrix m, std::string label) {
    if (!m.square() || m.rows() == 0)
        throw invalid_input_error("hamiltonian must be square and non-empty");
    if (hermiticity_defect(m) > 1e-12 * std::max(1.0, frobenius_norm(m)))
        throw invalid_input_error("hamiltonian '" + label + "' is not Hermitian");
    return HamiltonianSpec{std::move(m), std::move(label)};
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = c64{0.0, -1.0};
    m.at(1, 0) = c64{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

HamiltonianSpec hamiltonian_preset(const std::string& name) {
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    if (name == "local-y")
        return HamiltonianSpec{tensor(id2, pauli_y()), "local-y"};
    if (name == "global-y")
        return HamiltonianSpec{tensor(id2, pauli_y()) + tensor(pauli_y(), id2), "global-y"};
    throw invalid_input_error("unknown hamiltonian preset '" + name +
                              "' (expected local-y or global-y)");
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); }

ComplexMatrix partial_trace_env(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_e) {
    if (!m.square() || m.rows() != dim_s * dim_e)
        throw invalid_input_error("partial_trace_env: matrix dimension must be dim_s*dim_e");
    ComplexMatrix out(dim_s, dim_s);
    for (std::size_t i = 0; i < dim_s; ++i)
        for (std::size_t j = 0; j < dim_s; ++j) {
            c64 s{0.0, 0.0};
            for (std::size_t k = 0; k < dim_e; ++k)
                s += m.at(i * dim_e + k, j * dim_e + k);
            out.at(i, j) = s;
        }
    return out;
}

Propagator::Propagator(const HamiltonianSpec& h) : eig_(herm_eig(h.mat)) {}

ComplexMatrix Propagator::at(double t) const {
    const std::size_t n = eig_.vectors.rows();
    // V diag(exp(-i w t)) V^dag
    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            c64 s{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) {
                const double w = eig_.values[k];
                const c64 ph{std::cos(w * t), -std::sin(w * t)};
                s += eig_.vectors.at(i, k) * ph * std::conj(eig_.vectors.at(j, k));
            }
            u.at(i, j) = s;
        }
    return u;
}

ComplexMatrix unitary_at(const HamiltonianSpec& h, double t) { return Propagator(h).at(t); }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    const EigResult eig = herm_eig(symmetrized(a - b));
    double d = 0.0;
    for (double w : eig.values) d += std::abs(w);
    return 0.5 * d;
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return trace_distance(a.mat, b.mat);
}

} // namespace cgq
