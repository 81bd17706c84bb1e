#ifndef HMOM_VERIFY_HPP
#define HMOM_VERIFY_HPP

#include <string>
#include <vector>

namespace hmom {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Fixed seeds for the Monte-Carlo regressions; changing them invalidates
/// the recorded pass/fail expectations.
inline constexpr unsigned long long kMcRegressionSeed = 1;
inline constexpr unsigned long long kHistogramRegressionSeed = 2;

/// Regression thresholds for the spectral-histogram check, frozen from the
/// first calibration run (n=200, gaussian, 200 samples, 24 bins, seed above;
/// observed tv 0.0044, observed mass above 1.0 of 0.0008).
inline constexpr double kHistogramTvThreshold = 0.05;
inline constexpr double kHistogramEdgeMassThreshold = 0.01;

/// Runs the full cross-route verification suite (ten checks) and reports
/// one result per check. A check fails either on its tolerance or on its
/// time budget.
std::vector<CheckResult> run_verification(int threads = 1);

/// Renders "[PASS] ..." / "[FAIL] ..." lines; returns the failure count.
int print_verification(const std::vector<CheckResult>& results, std::ostream& os);

}  // namespace hmom

#endif  // HMOM_VERIFY_HPP
