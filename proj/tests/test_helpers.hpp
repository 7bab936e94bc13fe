#pragma once

// Shared generators and oracles for the test suite. Everything is seeded from
// SplitMix64 so failures replay exactly; the matrix exponential here is an
// independent Taylor implementation, deliberately different from the
// library's spectral one, so the two can check each other.

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cgq/complex_matrix.hpp"
#include "cgq/sampler.hpp"
#include "cgq/states.hpp"

namespace cgqtest {

using cgq::c64;
using cgq::ComplexMatrix;

inline cgq::SplitMix64 test_rng(std::uint64_t salt) {
    return cgq::SplitMix64(0x7E57ED5Eu ^ (salt * 0x9E3779B97F4A7C15ULL));
}

// Row-major literal constructor: matn(2, {a, b, c, d}) is [[a, b], [c, d]].
inline ComplexMatrix matn(std::size_t n, std::initializer_list<c64> entries) {
    ComplexMatrix m(n, n);
    std::size_t idx = 0;
    for (const c64& x : entries) m.data()[idx++] = x;
    return m;
}

inline c64 random_gaussian_c64(cgq::SplitMix64& rng) {
    double re, im;
    rng.gaussian_pair(re, im);
    return c64{re, im};
}

inline ComplexMatrix random_matrix(std::size_t n, cgq::SplitMix64& rng) {
    ComplexMatrix g(n, n);
    for (auto& x : g.data()) x = random_gaussian_c64(rng);
    return g;
}

inline ComplexMatrix random_hermitian(std::size_t n, cgq::SplitMix64& rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = 0.5 * (g.at(i, j) + std::conj(g.at(j, i)));
    return h;
}

// Wishart draw G G^dag / tr: full-rank valid density matrix almost surely.
inline cgq::DensityMatrix random_density(std::size_t n, cgq::SplitMix64& rng) {
    const ComplexMatrix g = random_matrix(n, rng);
    ComplexMatrix w = g * cgq::adjoint(g);
    w *= c64{1.0 / cgq::trace(w).real(), 0.0};
    return cgq::DensityMatrix::unchecked(std::move(w));
}

inline cgq::PureStateVector random_pure(std::size_t n, cgq::SplitMix64& rng) {
    cgq::PureStateVector psi;
    psi.amp.resize(n);
    for (auto& a : psi.amp) a = random_gaussian_c64(rng);
    return cgq::canonicalize(std::move(psi));
}

// exp(m) by scaling-and-squaring with a plain Taylor series. Independent of
// the library's spectral exponential; accurate to ~1e-14 for the small, mild
// matrices used in tests.
inline ComplexMatrix expm_taylor(const ComplexMatrix& m) {
    int squarings = 0;
    double scale = cgq::frobenius_norm(m);
    while (scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    ComplexMatrix x = m;
    x *= c64{1.0 / static_cast<double>(1ULL << squarings), 0.0};

    ComplexMatrix result = ComplexMatrix::identity(m.rows());
    ComplexMatrix term = ComplexMatrix::identity(m.rows());
    for (int k = 1; k <= 24; ++k) {
        term = term * x;
        term *= c64{1.0 / static_cast<double>(k), 0.0};
        result += term;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

// exp(-i h t), the propagator an exact implementation must reproduce.
inline ComplexMatrix expm_taylor_propagator(const ComplexMatrix& h, double t) {
    ComplexMatrix a = h;
    a *= c64{0.0, -t};
    return expm_taylor(a);
}

} // namespace cgqtest
