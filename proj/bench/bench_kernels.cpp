// Serial reference kernel vs the OpenMP kernel on the workloads that
// dominate run time: per-degree quotient construction and catalog sweeps.

#include "dualcoh/checks.hpp"
#include "dualcoh/presentations.hpp"
#include "dualcoh/report.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

using namespace dualcoh;

namespace {

double time_best(const std::function<void()>& f, int reps)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel)
{
    std::printf("%-34s %10.4f %10.4f %8.2fx\n", name, serial, parallel, serial / parallel);
}

std::vector<linalg::SparseVec> random_rows(int nrows, int ncols, double density, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<linalg::SparseVec> rows(static_cast<std::size_t>(nrows));
    const auto threshold = static_cast<std::uint64_t>(density * static_cast<double>(rng.max()));
    for (auto& r : rows)
        for (int c = 0; c < ncols; ++c)
            if (rng() < threshold)
                r.push_back({c, Rational(static_cast<long>(rng() % 19) - 9)});
    for (auto& r : rows)
        std::erase_if(r, [](const linalg::SparseEntry& e) { return e.value == 0; });
    return rows;
}

}  // namespace

int main(int argc, char** argv)
{
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
    std::printf("%-34s %10s %10s %9s\n", "workload", "serial s", "omp s", "speedup");

    // Very sparse, so that exact entries stay small.
    for (auto [nrows, ncols] : {std::pair{200, 150}, std::pair{400, 300}}) {
        const auto rows = random_rows(nrows, ncols, 0.01, 7);
        char name[64];
        std::snprintf(name, sizeof name, "rref random %dx%d", nrows, ncols);
        row(name, time_best([&] { linalg::rref_serial(rows, ncols); }, reps),
            time_best([&] { linalg::rref_parallel(rows, ncols); }, reps));
    }

    auto ring_row = [&](const char* name, const std::function<void(const BuildOptions&)>& build) {
        BuildOptions s{.kernel = linalg::Kernel::serial};
        BuildOptions p{.kernel = linalg::Kernel::parallel};
        row(name, time_best([&] { build(s); }, reps), time_best([&] { build(p); }, reps));
    };
    ring_row("Lagrangian(6)", [](const BuildOptions& o) { rings::lagrangian_ring(6, "sigma", o); });
    ring_row("Gr(4,8)", [](const BuildOptions& o) { rings::grassmannian_ring(4, 4, "sigma", "tau", o); });
    ring_row("Gr(5,10)", [](const BuildOptions& o) { rings::grassmannian_ring(5, 5, "sigma", "tau", o); });

    // Sweep parallelism is across instances; compare one thread with all.
    const report::SweepSpec spec{.id = catalog::FamilyId::unitary, .lo = 1, .hi = 4, .q_lo = 1, .q_hi = 4,
                                 .parts_mode = "all"};
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const double one = time_best([&] { report::run_sweep(spec, {}); }, reps);
    omp_set_num_threads(threads);
    const double all = time_best([&] { report::run_sweep(spec, {}); }, reps);
    row("sweep unitary p<=q<=4 (all parts)", one, all);
    return 0;
}
