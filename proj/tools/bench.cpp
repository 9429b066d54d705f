// Compares the serial reference enumerators (threads = 1) against the
// OpenMP-parallel kernels (threads = 0, all cores) on the two heaviest
// acceptance workloads and checks that the counts agree.

#include "tvw/models.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_partitions.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using Clock = std::chrono::steady_clock;

namespace {

struct Workload {
    std::string name;
    std::function<long long(int threads)> run;
};

void bench(const Workload& w) {
    auto time_run = [&](int threads, long long& count) {
        auto t0 = Clock::now();
        count = w.run(threads);
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };
    long long serial_count = 0, parallel_count = 0;
    double serial_ms = time_run(1, serial_count);
    double parallel_ms = time_run(0, parallel_count);
    std::printf("%-34s %10lld %9.1fms %9.1fms %6.2fx %s\n", w.name.c_str(), serial_count,
                serial_ms, parallel_ms, serial_ms / parallel_ms,
                serial_count == parallel_count ? "ok" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("%-34s %10s %11s %11s %7s\n", "workload", "count", "serial", "parallel",
                "speedup");

    Workload tverberg{"tverberg sierksma d=2 q=4", [](int threads) {
                          tvw::TverbergEnumOptions o;
                          o.threads = threads;
                          o.count_only = true;
                          auto cfg = tvw::sierksma_config(2, 4);
                          return tvw::enumerate_tverberg_partitions(
                                     cfg, 4, tvw::TverbergMode::general_position, o)
                              .count;
                      }};
    Workload winding{"winding altmodel K10 q=4", [](int threads) {
                         tvw::WindingEnumOptions o;
                         o.threads = threads;
                         auto m = tvw::alternating_linear_model(10);
                         return tvw::count_winding_partitions(m, 4, tvw::WindingMode::simplex,
                                                              o);
                     }};
    bench(tverberg);
    bench(winding);
    return 0;
}
