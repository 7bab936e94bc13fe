#include "cgq/assignment.hpp"

#include <cmath>

#include "cgq/errors.hpp"

namespace cgq {

DensityMatrix assign_partial_trace(const DensityMatrix& rho, std::size_t dim_e) {
    if (dim_e == 0) throw invalid_input_error("assign_partial_trace: dim_e must be positive");
    ComplexMatrix env = ComplexMatrix::identity(dim_e);
    env *= c64{1.0 / static_cast<double>(dim_e), 0.0};
    return DensityMatrix::unchecked(tensor(rho.mat, env));
}

DensityMatrix assign_bns(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw invalid_input_error("assign_bns: macro state must be a qubit");
    const double r00 = rho.mat.at(0, 0).real();
    const double r11 = rho.mat.at(1, 1).real();
    const c64 r01 = rho.mat.at(0, 1);

    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const c64 g = r01 * inv_sqrt3;
    double cross;
    if (r00 > 0.0) {
        cross = std::norm(r01) / (2.0 * r00) - r11 / 6.0;
    } else if (std::abs(r01) == 0.0) {
        // 0/0 -> 0: a vanishing ground population forces vanishing coherence,
        // and |rho01|^2 / (2 rho00) -> 0 along every valid approach.
        cross = -r11 / 6.0;
    } else {
        throw infeasible_error("assign_bns: rho00 = 0 with rho01 != 0 admits no "
                               "compatible pure state (input is not positive)");
    }

    ComplexMatrix m(4, 4);
    m.at(0, 0) = r00;
    for (std::size_t e = 1; e < 4; ++e) {
        m.at(0, e) = g;
        m.at(e, 0) = std::conj(g);
        m.at(e, e) = r11 / 3.0;
        for (std::size_t f = 1; f < 4; ++f)
            if (f != e) m.at(e, f) = cross;
    }
    return DensityMatrix::unchecked(m);
}

namespace {

constexpr double kInv3 = 1.0 / 3.0;

// Orthonormal basis of the plane orthogonal to (1,1,1).
constexpr std::array<double, 3> kPlaneE1{1.0 / 1.4142135623730951, -1.0 / 1.4142135623730951,
                                         0.0};
constexpr std::array<double, 3> kPlaneE2{1.0 / 2.4494897427831781, 1.0 / 2.4494897427831781,
                                         -2.0 / 2.4494897427831781};

std::array<double, 3> in_plane_unit(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c * kPlaneE1[0] + s * kPlaneE2[0], c * kPlaneE1[1] + s * kPlaneE2[1],
            c * kPlaneE1[2] + s * kPlaneE2[2]};
}

// Rotation about the unit axis (1,1,1)/sqrt(3) by angle t (Rodrigues form).
std::array<double, 3> rotate_sym_axis(const std::array<double, 3>& v, double t) {
    constexpr double nx = 0.57735026918962576;  // 1/sqrt(3)
    const double c = std::cos(t);
    const double s = std::sin(t);
    const double dot = nx * (v[0] + v[1] + v[2]);
    const std::array<double, 3> cross{nx * (v[2] - v[1]), nx * (v[0] - v[2]),
                                      nx * (v[1] - v[0])};
    std::array<double, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = v[i] * c + cross[i] * s + nx * dot * (1.0 - c);
    return out;
}

} // namespace

OrbitSeed orbit_seed_with(const DensityMatrix& rho, double phi_a, double phi_b, double split,
                          double tol) {
    if (rho.dim() != 2) throw invalid_input_error("orbit seed: macro state must be a qubit");
    const double r00 = rho.mat.at(0, 0).real();
    const double r11 = rho.mat.at(1, 1).real();
    const c64 r01 = rho.mat.at(0, 1);

    OrbitSeed seed;
    seed.b00 = 0.0;

    double sa = 0.0;
    double sb = 0.0;
    double rad2;
    if (r00 > tol) {
        seed.a00 = std::sqrt(r00);
        sa = std::sqrt(3.0) * r01.real() / seed.a00;
        sb = -std::sqrt(3.0) * r01.imag() / seed.a00;
        rad2 = r11 - std::norm(r01) / r00;
    } else {
        // Ground population zero: positivity forces rho01 = 0, so the pinned
        // components vanish and the full excited norm is free.
        if (std::abs(r01) > std::sqrt(tol))
            throw infeasible_error("orbit seed: no pure state is compatible with "
                                   "rho00 = 0 and rho01 != 0");
        seed.a00 = 0.0;
        rad2 = r11;
    }
    if (rad2 < -tol)
        throw infeasible_error("orbit seed: compatible set is empty (input not positive)");
    const double rad = std::sqrt(std::max(rad2, 0.0));

    const double ra = rad * std::cos(split);
    const double rb = rad * std::sin(split);
    const std::array<double, 3> ua = in_plane_unit(phi_a);
    const std::array<double, 3> ub = in_plane_unit(phi_b);
    for (int i = 0; i < 3; ++i) {
        seed.a[i] = sa * kInv3 + ra * ua[i];
        seed.b[i] = sb * kInv3 + rb * ub[i];
    }
    return seed;
}

OrbitSeed canonical_orbit_seed(const DensityMatrix& rho, double tol) {
    return orbit_seed_with(rho, 0.0, 0.0, 0.0, tol);
}

void orbit_state_into(const OrbitSeed& seed, double theta, double phi, std::vector<c64>& amp) {
    const std::array<double, 3> a = rotate_sym_axis(seed.a, theta);
    const std::array<double, 3> b = rotate_sym_axis(seed.b, phi);
    amp.resize(4);
    amp[0] = c64{seed.a00, seed.b00};
    for (int i = 0; i < 3; ++i) amp[i + 1] = c64{a[i], b[i]};
}

PureStateVector orbit_state(const OrbitSeed& seed, double theta, double phi) {
    PureStateVector psi;
    orbit_state_into(seed, theta, phi, psi.amp);
    psi.canonical_phase = false;
    return psi;
}

} // namespace cgq
