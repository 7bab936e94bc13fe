// Timing harness for the Monte-Carlo averaging kernels: the chunked
// (OpenMP-parallel) estimators against their serial reference twins, on the
// same seeds, so the printed max|diff| doubles as a correctness check.
//
// Usage: cgq_bench [samples]   (default 2e6 for the orbit kernel; the Haar
// kernel runs samples/4 since each of its draws is far more expensive)

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cgq/assignment.hpp"
#include "cgq/complex_matrix.hpp"
#include "cgq/states.hpp"

using namespace cgq;

namespace {

DensityMatrix bench_state() {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = 0.6;
    m.at(0, 1) = c64{0.2, -0.1};
    m.at(1, 0) = c64{0.2, 0.1};
    m.at(1, 1) = 0.4;
    return DensityMatrix::unchecked(m);
}

template <typename Fn>
double time_s(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* name, std::uint64_t samples, double serial_s, double chunked_s,
            double gap) {
    std::printf("%-28s %10llu samples | serial %7.3f s (%8.2e/s) | chunked %7.3f s "
                "(%8.2e/s) | speedup %4.2fx | max|diff| %.3e\n",
                name, static_cast<unsigned long long>(samples), serial_s,
                static_cast<double>(samples) / serial_s, chunked_s,
                static_cast<double>(samples) / chunked_s, serial_s / chunked_s, gap);
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t samples = 2'000'000;
    if (argc > 1) samples = std::strtoull(argv[1], nullptr, 10);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; chunked path runs on one thread\n");
#endif

    const DensityMatrix rho = bench_state();

    {
        SamplerConfig cfg;
        cfg.sample_count = samples;
        cfg.seed = 1234;
        DensityMatrix serial{ComplexMatrix(2, 2)}, chunked{ComplexMatrix(2, 2)};
        const double serial_s = time_s([&] { serial = mc_average_bns_serial(rho, cfg); });
        const double chunked_s = time_s([&] { chunked = mc_average_bns(rho, cfg); });
        report("orbit average (4x4)", samples, serial_s, chunked_s,
               max_abs_diff(serial.mat, chunked.mat));
    }
    {
        SamplerConfig cfg;
        cfg.sample_count = samples / 4;
        cfg.seed = 1234;
        DensityMatrix serial{ComplexMatrix(4, 4)}, chunked{ComplexMatrix(4, 4)};
        const double serial_s =
            time_s([&] { serial = mc_average_partial_trace_serial(rho, 2, cfg); });
        const double chunked_s = time_s([&] { chunked = mc_average_partial_trace(rho, 2, cfg); });
        report("Haar-environment avg (4x4)", cfg.sample_count, serial_s, chunked_s,
               max_abs_diff(serial.mat, chunked.mat));
    }
    return 0;
}
