#include "hs1/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hs1 {

namespace {

CheckResult run_one(const Check& c) {
    CheckResult r;
    r.name = c.name;
    try {
        auto fail = c.run();
        r.pass = !fail.has_value();
        if (fail) r.detail = *fail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

} // namespace

Report run_checks(const std::string& suite, const std::vector<Check>& checks, Exec exec) {
    Report rep;
    rep.suite = suite;
    rep.results.resize(checks.size());
    const long n = static_cast<long>(checks.size());
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            rep.results[static_cast<std::size_t>(i)] = run_one(checks[static_cast<std::size_t>(i)]);
        return rep;
    }
#else
    (void)exec;
#endif
    for (long i = 0; i < n; ++i)
        rep.results[static_cast<std::size_t>(i)] = run_one(checks[static_cast<std::size_t>(i)]);
    return rep;
}

} // namespace hs1
