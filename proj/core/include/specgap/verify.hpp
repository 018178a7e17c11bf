#pragma once

#include <string>
#include <vector>

namespace specgap {

struct CheckResult {
    std::string name;
    bool pass = false;
    bool informational = false;  // reported, never fails the run
    double margin = 0.0;         // signed distance to the threshold (>= 0 passes)
    std::string detail;
};

struct VerifyOptions {
    std::string filter;         // substring match on check names; empty = all
    double lambda2_bias = 0.0;  // harness self-test: added to every model lambda_2
    int grid_m = 2000;
};

// Runs the full property matrix (curvature kernels, model solver, gap
// analysis, eigenfunction moduli, ball spectra, variation geometry).
std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

// True when every non-informational check passed.
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace specgap
