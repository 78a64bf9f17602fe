#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/norms.hpp"

namespace padic {

// One verification trial: both sides of the selected inequality, the discrete
// constant, and bookkeeping. For the weak-type suites pass means
// ratio <= 1 + tolerance; for the strong (Lorentz) suites, where
// interpolation yields no explicit constant, pass means the ratio is finite.
struct TrialRecord {
    std::string suite;
    int index = 0;
    SpaceParams params;
    std::string kernel;
    std::string symbol; // commutator suites only
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 0.0;
    double input_norm = 0.0;
    double ratio = 0.0;
    double ratio_enlarged = 0.0; // strong suites: ratio with the input window padded by 8 shells
    bool pass = false;
    bool degenerate = false;
    bool skipped = false;
    bool majorant_ok = true;
    std::string reason;
    double micros = 0.0; // wall time; serialized only on request
};

struct SuiteConfig {
    std::vector<std::string> suites = {"thm3", "thm4_weak", "thm4_strong", "thm5_weak",
                                       "thm5_strong"};
    int trials_weak = 200;
    int trials_strong = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    int jobs = 1;
    double value_min = 1e-2;
    double value_max = 1e2;
    int window_lo = -8;
    int window_hi = 8;
    int max_window_len = 7;
    bool include_timings = false;
};

SuiteConfig parse_suite_config_json(const std::string& text);

struct SuiteSummary {
    int attempted = 0;
    int passed = 0;
    int failed = 0;
    int degenerate = 0;
    int skipped = 0;
    int majorant_failures = 0;
    long rejections = 0;
    double max_ratio = 0.0;
    double max_ratio_enlarged = 0.0; // strong suites
    double stability_change = 0.0;   // strong suites: relative change of max ratio
    bool stability_ok = true;
};

struct SuiteResult {
    std::string suite;
    std::vector<TrialRecord> records;
    SuiteSummary summary;
};

SuiteResult verify_thm3(const SuiteConfig& cfg);
SuiteResult verify_thm4_weak(const SuiteConfig& cfg);
SuiteResult verify_thm4_strong(const SuiteConfig& cfg);
SuiteResult verify_thm5_weak(const SuiteConfig& cfg);
SuiteResult verify_thm5_strong(const SuiteConfig& cfg);

// Runs the configured suites (names as in SuiteConfig::suites; "all" expands).
std::vector<SuiteResult> run_suites(const SuiteConfig& cfg);

std::string report_to_json(const std::vector<SuiteResult>& results, const SuiteConfig& cfg);
std::string report_to_csv(const std::vector<SuiteResult>& results);

// false when any non-degenerate, non-skipped trial fails (or a strong-suite
// stability check fails)
bool verification_passed(const std::vector<SuiteResult>& results);

} // namespace padic
