// Compares the serial survey path (jobs=1) against the OpenMP worker pool and
// checks that both emit identical records.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stab/survey.hpp"

using namespace stab;
using Clock = std::chrono::steady_clock;

namespace {

double run_once(int max_order, int jobs, std::vector<SurveyRecord>& out) {
    SurveyOptions opts;
    opts.max_order = max_order;
    opts.jobs = jobs;
    auto t0 = Clock::now();
    survey(opts, &out);
    auto t1 = Clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int max_order = 16;
    if (argc > 1) max_order = std::atoi(argv[1]);

    std::vector<SurveyRecord> serial, parallel;
    double t_serial = run_once(max_order, 1, serial);

    int hw = 1;
#ifdef _OPENMP
    hw = omp_get_max_threads();
#endif
    double t_parallel = run_once(max_order, 0, parallel);

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i)
        identical = serial[i].to_jsonl() == parallel[i].to_jsonl();

    std::printf("survey up to order %d (%zu specs)\n", max_order, serial.size());
    std::printf("  serial (jobs=1)   : %8.2f s\n", t_serial);
    std::printf("  parallel (jobs=%d) : %8.2f s   speedup %.2fx\n", hw, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0);
    std::printf("  records identical : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
