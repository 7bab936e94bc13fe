#include "cgq/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cgq/assignment.hpp"
#include "cgq/eig.hpp"
#include "cgq/errors.hpp"
#include "cgq/states.hpp"

namespace cgq {

void SplitMix64::gaussian_pair(double& z0, double& z1) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(a);
    z1 = r * std::sin(a);
}

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return SplitMix64(z);
}

ComplexMatrix haar_unitary(std::size_t dim, SplitMix64& rng) {
    ComplexMatrix q(dim, dim);  // columns built in place
    for (std::size_t j = 0; j < dim; ++j) {
        for (int attempt = 0;; ++attempt) {
            for (std::size_t i = 0; i < dim; ++i) {
                double re, im;
                rng.gaussian_pair(re, im);
                q.at(i, j) = c64{re, im};
            }
            // Modified Gram-Schmidt against the finished columns.
            for (std::size_t p = 0; p < j; ++p) {
                c64 proj{0.0, 0.0};
                for (std::size_t i = 0; i < dim; ++i)
                    proj += std::conj(q.at(i, p)) * q.at(i, j);
                for (std::size_t i = 0; i < dim; ++i) q.at(i, j) -= proj * q.at(i, p);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < dim; ++i) nrm += std::norm(q.at(i, j));
            nrm = std::sqrt(nrm);
            if (nrm > 1e-8) {
                for (std::size_t i = 0; i < dim; ++i) q.at(i, j) /= nrm;
                break;
            }
            if (attempt > 100)
                throw infeasible_error("haar_unitary: degenerate Ginibre draw persisted");
            // Essentially-zero residual (measure zero): redraw the column.
        }
    }
    return q;
}

KahanMatrixSum::KahanMatrixSum(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      sum_re_(rows * cols, 0.0),
      sum_im_(rows * cols, 0.0),
      comp_re_(rows * cols, 0.0),
      comp_im_(rows * cols, 0.0) {}

void KahanMatrixSum::accumulate(std::size_t idx, double re, double im) {
    // Kahan: carry the rounding error of each addition into the next one.
    double y = re - comp_re_[idx];
    double t = sum_re_[idx] + y;
    comp_re_[idx] = (t - sum_re_[idx]) - y;
    sum_re_[idx] = t;

    y = im - comp_im_[idx];
    t = sum_im_[idx] + y;
    comp_im_[idx] = (t - sum_im_[idx]) - y;
    sum_im_[idx] = t;
}

void KahanMatrixSum::add(const ComplexMatrix& m) {
    for (std::size_t idx = 0; idx < m.data().size(); ++idx)
        accumulate(idx, m.data()[idx].real(), m.data()[idx].imag());
}

void KahanMatrixSum::add_scaled_projector(const std::vector<c64>& amp) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const c64 v = amp[i] * std::conj(amp[j]);
            accumulate(i * cols_ + j, v.real(), v.imag());
        }
}

void KahanMatrixSum::merge(const KahanMatrixSum& other) {
    for (std::size_t idx = 0; idx < sum_re_.size(); ++idx)
        accumulate(idx, other.sum_re_[idx], other.sum_im_[idx]);
}

ComplexMatrix KahanMatrixSum::total_scaled(double scale) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t idx = 0; idx < sum_re_.size(); ++idx)
        out.data()[idx] = c64{sum_re_[idx] * scale, sum_im_[idx] * scale};
    return out;
}

namespace {

void check_sampler_config(const SamplerConfig& cfg) {
    if (cfg.sample_count == 0) throw invalid_input_error("sampler: sample_count must be >= 1");
    if (cfg.chunk_size == 0) throw invalid_input_error("sampler: chunk_size must be >= 1");
}

// Shared chunked-parallel skeleton: per-sample work is a pure function of
// (seed, k), each chunk owns a compensated partial sum, and partials merge in
// chunk-index order. Identical output for any thread count, and within 1e-12
// of the plain serial loop.
template <typename PerSample>
ComplexMatrix chunked_mean(std::size_t dim, const SamplerConfig& cfg, const PerSample& work) {
    const std::uint64_t n = cfg.sample_count;
    const std::uint64_t chunk = cfg.chunk_size;
    const std::uint64_t nchunks = (n + chunk - 1) / chunk;

    std::vector<KahanMatrixSum> partials(nchunks, KahanMatrixSum(dim, dim));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk;
        const std::uint64_t end = std::min(n, begin + chunk);
        KahanMatrixSum& acc = partials[static_cast<std::size_t>(c)];
        std::vector<c64> amp(dim);
        for (std::uint64_t k = begin; k < end; ++k) {
            work(k, amp);
            acc.add_scaled_projector(amp);
        }
    }

    KahanMatrixSum total(dim, dim);
    for (const auto& p : partials) total.merge(p);
    return total.total_scaled(1.0 / static_cast<double>(n));
}

template <typename PerSample>
ComplexMatrix serial_mean(std::size_t dim, const SamplerConfig& cfg, const PerSample& work) {
    KahanMatrixSum acc(dim, dim);
    std::vector<c64> amp(dim);
    for (std::uint64_t k = 0; k < cfg.sample_count; ++k) {
        work(k, amp);
        acc.add_scaled_projector(amp);
    }
    return acc.total_scaled(1.0 / static_cast<double>(cfg.sample_count));
}

struct BnsSampleFn {
    OrbitSeed seed;
    std::uint64_t run_seed;

    void operator()(std::uint64_t k, std::vector<c64>& amp) const {
        SplitMix64 rng = sample_stream(run_seed, k);
        const double theta = 2.0 * std::numbers::pi * rng.uniform01();
        const double phi = 2.0 * std::numbers::pi * rng.uniform01();
        orbit_state_into(seed, theta, phi, amp);
    }
};

struct PurificationSampleFn {
    std::vector<c64> psi;  // purification amplitudes, env index fast
    std::size_t dim_s;
    std::size_t dim_e;
    std::uint64_t run_seed;

    void operator()(std::uint64_t k, std::vector<c64>& amp) const {
        SplitMix64 rng = sample_stream(run_seed, k);
        const ComplexMatrix u = haar_unitary(dim_e, rng);
        // (1 (x) U) |psi>
        for (std::size_t i = 0; i < dim_s; ++i)
            for (std::size_t r = 0; r < dim_e; ++r) {
                c64 s{0.0, 0.0};
                for (std::size_t l = 0; l < dim_e; ++l)
                    s += u.at(r, l) * psi[i * dim_e + l];
                amp[i * dim_e + r] = s;
            }
    }
};

PurificationSampleFn make_purification_fn(const DensityMatrix& rho, std::size_t dim_e,
                                          std::uint64_t run_seed) {
    const std::size_t dim_s = rho.dim();
    const EigResult eig = herm_eig(rho.mat);
    std::size_t rank = 0;
    for (double w : eig.values)
        if (w > 1e-12) ++rank;
    if (rank > dim_e)
        throw infeasible_error("mc_average_partial_trace: environment of dimension " +
                               std::to_string(dim_e) + " cannot purify a rank-" +
                               std::to_string(rank) + " state");

    // |psi> = sum_i sqrt(lambda_i) |v_i> (x) |i>, spectral weights clamped at 0.
    std::vector<c64> psi(dim_s * dim_e, c64{0.0, 0.0});
    std::size_t env_slot = 0;
    for (std::size_t idx = 0; idx < eig.values.size(); ++idx) {
        if (eig.values[idx] <= 1e-12) continue;
        const double w = std::sqrt(eig.values[idx]);
        for (std::size_t i = 0; i < dim_s; ++i)
            psi[i * dim_e + env_slot] += w * eig.vectors.at(i, idx);
        ++env_slot;
    }
    return PurificationSampleFn{std::move(psi), dim_s, dim_e, run_seed};
}

} // namespace

DensityMatrix mc_average_bns(const DensityMatrix& rho, const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    const BnsSampleFn fn{canonical_orbit_seed(rho), cfg.seed};
    return DensityMatrix::unchecked(chunked_mean(4, cfg, fn));
}

DensityMatrix mc_average_bns_serial(const DensityMatrix& rho, const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    const BnsSampleFn fn{canonical_orbit_seed(rho), cfg.seed};
    return DensityMatrix::unchecked(serial_mean(4, cfg, fn));
}

DensityMatrix mc_average_orbit(const OrbitSeed& seed, const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    const BnsSampleFn fn{seed, cfg.seed};
    return DensityMatrix::unchecked(chunked_mean(4, cfg, fn));
}

DensityMatrix mc_average_orbit_serial(const OrbitSeed& seed, const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    const BnsSampleFn fn{seed, cfg.seed};
    return DensityMatrix::unchecked(serial_mean(4, cfg, fn));
}

DensityMatrix mc_average_partial_trace(const DensityMatrix& rho, std::size_t dim_e,
                                       const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    if (dim_e == 0) throw invalid_input_error("mc_average_partial_trace: dim_e must be >= 1");
    const PurificationSampleFn fn = make_purification_fn(rho, dim_e, cfg.seed);
    return DensityMatrix::unchecked(chunked_mean(rho.dim() * dim_e, cfg, fn));
}

DensityMatrix mc_average_partial_trace_serial(const DensityMatrix& rho, std::size_t dim_e,
                                              const SamplerConfig& cfg) {
    check_sampler_config(cfg);
    if (dim_e == 0) throw invalid_input_error("mc_average_partial_trace: dim_e must be >= 1");
    const PurificationSampleFn fn = make_purification_fn(rho, dim_e, cfg.seed);
    return DensityMatrix::unchecked(serial_mean(rho.dim() * dim_e, cfg, fn));
}

} // namespace cgq
