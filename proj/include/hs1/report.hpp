#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hs1 {

enum class Exec { serial, parallel };

// A named pure check; returns nullopt on pass, or a counterexample rendering
// (both sides and their difference) on failure.
struct Check {
    std::string name;
    std::function<std::optional<std::string>()> run;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample text when failed
};

struct Report {
    std::string suite;
    std::vector<CheckResult> results;

    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& r : results)
            if (!r.pass) ++n;
        return n;
    }
    const CheckResult* first_failure() const {
        for (const auto& r : results)
            if (!r.pass) return &r;
        return nullptr;
    }
};

// Runs every check and collects results in check order.  The parallel path
// fans out with OpenMP (checks are pure and independent); both paths produce
// identical reports.
Report run_checks(const std::string& suite, const std::vector<Check>& checks,
                  Exec exec = Exec::parallel);

// Helper for equality checks: renders "lhs / rhs / difference" on mismatch.
template <typename T>
std::optional<std::string> expect_equal(const T& lhs, const T& rhs,
                                        const std::string& what = "") {
    if (lhs == rhs) return std::nullopt;
    std::string s;
    if (!what.empty()) s += what + "\n";
    s += "  lhs  = " + lhs.str() + "\n";
    s += "  rhs  = " + rhs.str() + "\n";
    s += "  diff = " + (lhs - rhs).str();
    return s;
}

} // namespace hs1
