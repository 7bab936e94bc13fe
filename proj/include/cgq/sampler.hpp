#pragma once

#include <cstdint>
#include <vector>

#include "cgq/complex_matrix.hpp"

namespace cgq {

// SplitMix64: fast 64-bit generator with a cheap split operation, which is
// what the per-sample substreams below are built on.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal pair (Box-Muller).
    void gaussian_pair(double& z0, double& z1);

private:
    std::uint64_t state_;
};

// The substream for sample k of run seed: finalizer-mixed so neighbouring k
// land at unrelated state-space points. Sample results depend on (seed, k)
// only, never on execution order — the root of the run-to-run determinism.
SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t k);

// Haar-distributed unitary: complex Ginibre matrix orthonormalized by
// modified Gram-Schmidt (whose R-diagonal is real positive, which is exactly
// the normalization that makes the result Haar rather than merely unitary).
ComplexMatrix haar_unitary(std::size_t dim, SplitMix64& rng);

// Compensated (Kahan) accumulator for matrix sums: keeps the roundoff of a
// million-term sum near one ulp so chunked and serial reductions agree to
// ~1e-15 even though they group terms differently.
class KahanMatrixSum {
public:
    KahanMatrixSum(std::size_t rows, std::size_t cols);

    void add(const ComplexMatrix& m);
    void add_scaled_projector(const std::vector<c64>& amp);  // += |amp><amp|
    void merge(const KahanMatrixSum& other);                 // += other's total

    ComplexMatrix total_scaled(double scale) const;  // scale * sum

private:
    void accumulate(std::size_t idx, double re, double im);

    std::size_t rows_, cols_;
    std::vector<double> sum_re_, sum_im_, comp_re_, comp_im_;
};

} // namespace cgq
