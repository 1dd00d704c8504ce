// Benchmark: OpenMP sweep kernel against the serial reference, verifying that
// both produce byte-identical output.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rotorcool/analysis.hpp"

using namespace rotorcool;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    int repeat = 3;
    int segments = 400;
    if (argc > 1) repeat = std::atoi(argv[1]);
    if (argc > 2) segments = std::atoi(argv[2]);

    SweepSpec spec;
    spec.models = {1, 2, 3, 4};
    spec.speeds_rpm = {0, 3000, 5000, 7000, 9000, 10000, 12000, 18000};
    spec.flows_lpm = {3, 4, 5, 6};
    spec.inlet_temps_c = {50, 60, 70, 80};
    spec.n_axial_segments = segments;

    const std::size_t rows_per_run =
        spec.models.size() * spec.speeds_rpm.size() * spec.flows_lpm.size() *
        spec.inlet_temps_c.size();
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("grid: %zu rows x %d repeats, %d axial segments\n", rows_per_run,
                repeat, segments);

    std::string serial_csv, parallel_csv;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeat; ++i)
        serial_csv = to_csv(run_sweep_serial(spec));
    const double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < repeat; ++i)
        parallel_csv = to_csv(run_sweep(spec, {}, ExecutionPolicy::parallel));
    const double parallel_s = seconds_since(t0);

    std::printf("serial:   %.3f s  (%.1f rows/s)\n", serial_s,
                repeat * rows_per_run / serial_s);
    std::printf("parallel: %.3f s  (%.1f rows/s)\n", parallel_s,
                repeat * rows_per_run / parallel_s);
    std::printf("speedup:  %.2fx\n", serial_s / parallel_s);

    if (serial_csv != parallel_csv) {
        std::printf("FAIL: serial and parallel outputs differ\n");
        return 1;
    }
    std::printf("outputs identical: yes\n");
    return 0;
}
