// Compares the serial and OpenMP check runners on the heavier suites.
#include "hs1/bicross.hpp"
#include "hs1/jets.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace hs1;

double run_timed(const std::string& suite, const std::vector<Check>& checks, Exec exec) {
    auto t0 = std::chrono::steady_clock::now();
    Report r = run_checks(suite, checks, exec);
    auto t1 = std::chrono::steady_clock::now();
    if (!r.all_pass()) std::printf("  WARNING: %zu checks failed\n", r.fail_count());
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int max_index = argc > 1 ? std::atoi(argv[1]) : 5;
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("max generator index: %d\n\n", max_index);
    std::printf("%-12s %10s %10s %8s\n", "suite", "serial[s]", "parallel[s]", "speedup");

    antipode_table().precompute(max_index + 1);

    struct Entry {
        const char* name;
        std::vector<Check> checks;
    };
    std::vector<Entry> entries;
    entries.push_back({"action", action_checks(max_index, 50, 42)});
    entries.push_back({"compat", compatibility_checks(max_index, 100, 42)});
    entries.push_back({"hopf", h_hopf_checks(max_index, 50, 42)});
    entries.push_back({"jets", jets_checks(max_index, 20, 42)});

    for (const auto& e : entries) {
        double ts = run_timed(e.name, e.checks, Exec::serial);
        double tp = run_timed(e.name, e.checks, Exec::parallel);
        std::printf("%-12s %10.3f %10.3f %8.2fx\n", e.name, ts, tp, ts / (tp > 0 ? tp : 1e-9));
    }
    return 0;
}
