// Compares the OpenMP enumeration kernels against their serial reference
// implementations. Run with OMP_NUM_THREADS to vary the thread count.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "taulab/heights.hpp"
#include "taulab/phase_model.hpp"
#include "taulab/six_vertex.hpp"

using namespace taulab;

static double time_it(const std::function<void()>& fn, int reps = 3) {
    double best = 1e100;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-36s %12s %12s %8s\n", "kernel", "serial[s]", "parallel[s]", "speedup");

    {
        Rng rng(1);
        SpectralPoint pt = sample_spectral_point(rng, 6);
        VertexWeight w = [&pt](int i, int j, VertexType t) -> Rat {
            Rat half(1, 2);
            switch (t) {
                case VT_EMPTY:
                case VT_CROSS: {
                    Rat e = pt.y[j] / (pt.x[i] * pt.p);
                    return (e - e.inv()) * half;
                }
                case VT_VSTRAIGHT:
                case VT_HSTRAIGHT: {
                    Rat e = pt.y[j] / pt.x[i];
                    return (e - e.inv()) * half;
                }
                default: return (pt.p.inv() - pt.p) * half;
            }
        };
        Rat a, b;
        double ts = time_it([&] { a = dwbc_weighted_sum_serial(6, w); });
        double tp = time_it([&] { b = dwbc_weighted_sum(6, w); });
        if (!(a == b)) std::printf("MISMATCH in sixvertex sum\n");
        std::printf("%-36s %12.4f %12.4f %8.2f\n", "sixvertex dwpf bruteforce N=6", ts, tp,
                    ts / tp);
    }

    {
        std::vector<long> a, b;
        double ts = time_it([&] { a = plane_partition_census_serial(4, 4, 6); });
        double tp = time_it([&] { b = plane_partition_census(4, 4, 6); });
        if (a != b) std::printf("MISMATCH in census\n");
        std::printf("%-36s %12.4f %12.4f %8.2f\n", "plane partition census 4x4x6", ts, tp,
                    ts / tp);
    }

    {
        Rng rng(2);
        BsosParams par = sample_bsos(rng, 5);
        BigFloat a, b;
        double ts = time_it([&] { a = bsos_bruteforce_serial(5, par); }, 2);
        double tp = time_it([&] { b = bsos_bruteforce(5, par); }, 2);
        if (rel_residual(a, b) > BigFloat("1e-50")) std::printf("MISMATCH in bsos sum\n");
        std::printf("%-36s %12.4f %12.4f %8.2f\n", "bsos dwpf bruteforce N=5", ts, tp, ts / tp);
    }

    return 0;
}
