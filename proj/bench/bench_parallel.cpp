// Timing comparison of the serial reference paths against their
// OpenMP-parallel counterparts: the batch avoider sampler, the exact
// shape-weight scan, and the petrov window scan (quadratic reference vs
// pruned vs parallel; d=1 input keeps every window inside the bounds so both
// scanners do their full work).

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pav/petrov.hpp"
#include "pav/replicas.hpp"
#include "pav/sampler.hpp"
#include "pav/scaled_family.hpp"

using namespace pav;

namespace {

template <class F>
double timed(const char* name, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("  %-38s %8.3f s\n", name, s);
    return s;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (OpenMP disabled)\n");
#endif

    {
        std::printf("batch sampler: 2000 draws from Av_3000(4321)\n");
        auto run = [&](bool parallel) {
            ShapeSamplerOptions opts;
            opts.parallel = parallel;
            (void)sample_avoiders(3000, 3, 2000, 42, 0, opts);
        };
        const double ts = timed("serial", [&] { run(false); });
        const double tp = timed("openmp", [&] { run(true); });
        std::printf("  speedup %.2fx\n", ts / tp);
    }

    {
        std::printf("scaled-family construction: 800 x Av_20000(321)\n");
        const std::size_t reps = 800;
        const auto perms = sample_avoiders(20000, 2, reps, 43);
        std::vector<double> sink(reps);
        auto body = [&](std::size_t r, SeededRng&) {
            const auto fam = build_p_sigma(perms[r], 2);
            sink[r] = fam.value(1, 0.5);
        };
        const double ts = timed("serial", [&] { for_each_replica(reps, 0, 0, false, body); });
        const double tp = timed("openmp", [&] { for_each_replica(reps, 0, 0, true, body); });
        std::printf("  speedup %.2fx\n", ts / tp);
    }

    {
        std::printf("petrov window scan, all windows in bounds (d=1)\n");
        const int m = 20000;
        const LayeredWords ones(std::vector<std::uint8_t>(static_cast<std::size_t>(m), 1),
                                std::vector<std::uint8_t>(static_cast<std::size_t>(m), 1), 1);
        bool r1 = false, r2 = false, r3 = false;
        timed("quadratic reference, m=20000", [&] { r1 = petrov(ones, m, {false, false}); });
        timed("pruned, m=20000", [&] { r2 = petrov(ones, m, {true, false}); });
        timed("pruned + openmp, m=20000", [&] { r3 = petrov(ones, m, {true, true}); });
        std::printf("  results agree and hold: %s\n", (r1 && r2 && r3) ? "yes" : "NO");

        const int big = 2000000;
        const LayeredWords huge(std::vector<std::uint8_t>(static_cast<std::size_t>(big), 1),
                                std::vector<std::uint8_t>(static_cast<std::size_t>(big), 1), 1);
        timed("pruned, m=2e6", [&] { (void)petrov(huge, big, {true, false}); });
    }
    return 0;
}
