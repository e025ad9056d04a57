#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qps::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

struct Options {
    std::optional<std::string> only;  // run a single named check
    std::optional<int> dim_filter;    // restrict the d sweep where applicable
    double tolerance = 1e-10;         // the default machine-precision gate

    // Fault-injection knob for the negative control: any value other than -2
    // breaks the kernel phase cancellations and must trip the reality check.
    int fourier_symplectic_scale = -2;
};

std::vector<std::string> check_names();
std::vector<CheckResult> run_checks(const Options& options = {});
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qps::verify
