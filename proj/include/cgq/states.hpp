#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgq/complex_matrix.hpp"
#include "cgq/eig.hpp"

namespace cgq {

// Density operator. The wrapped matrix is trusted by construction sites;
// use validate_density / DensityMatrix::checked when the source is untrusted.
struct DensityMatrix {
    ComplexMatrix mat;

    std::size_t dim() const { return mat.rows(); }

    // Validates (hermiticity, unit trace, positivity) and throws
    // invalid_input_error on failure.
    static DensityMatrix checked(ComplexMatrix m, double tol = 1e-12);
    static DensityMatrix unchecked(ComplexMatrix m) { return DensityMatrix{std::move(m)}; }
};

struct ValidationReport {
    bool pass = false;
    double hermiticity_defect = 0.0;
    double trace_defect = 0.0;
    double min_eigenvalue = 0.0;
};

// Hermiticity and trace defects measured against tol; positivity against a
// floor of -100*tol (so the default tol=1e-12 admits eigenvalues down to -1e-10,
// i.e. numerical dust from roundtrips but nothing physical).
ValidationReport validate_density(const ComplexMatrix& m, double tol = 1e-12);

// Pure state amplitudes. canonical_phase marks vectors normalized to the
// convention "first nonzero amplitude is real and non-negative".
struct PureStateVector {
    std::vector<c64> amp;
    bool canonical_phase = false;

    std::size_t dim() const { return amp.size(); }
    double norm() const;
    ComplexMatrix projector() const;  // |psi><psi|
};

// Rescales to unit norm and rotates the global phase to the canonical
// convention. Throws invalid_input_error on (numerically) zero vectors.
PureStateVector canonicalize(PureStateVector psi, double tol = 1e-12);

struct HamiltonianSpec {
    ComplexMatrix mat;
    std::string label;

    std::size_t dim() const { return mat.rows(); }

    // Validates hermiticity (tol 1e-12 relative to the matrix scale).
    static HamiltonianSpec checked(ComplexMatrix m, std::string label);
};

// Named 4x4 presets: "local-y" = 1 (x) sigma_y, "global-y" = 1 (x) sigma_y + sigma_y (x) 1.
// Composite indices are (slow, fast) = (first factor, second factor) throughout.
HamiltonianSpec hamiltonian_preset(const std::string& name);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Composite of two operators, first factor on the slow index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace out the trailing (fast, dim_e) factor of a (dim_s*dim_e) square matrix.
ComplexMatrix partial_trace_env(const ComplexMatrix& m, std::size_t dim_s, std::size_t dim_e);

// U(t) = exp(-i h t), via the spectral decomposition of h (hbar = 1, so t
// carries the frequency: pass omega*t in dimensionless form).
ComplexMatrix unitary_at(const HamiltonianSpec& h, double t);

// Caches the eigendecomposition of h so time grids don't re-diagonalize.
class Propagator {
public:
    explicit Propagator(const HamiltonianSpec& h);
    ComplexMatrix at(double t) const;
    std::size_t dim() const { return eig_.vectors.rows(); }

private:
    EigResult eig_;
};

// (1/2) tr |a - b|.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

} // namespace cgq
