#pragma once

// The twelve acceptance checks, shared by the acceptance test binary and `floquet verify`.

#include <map>
#include <string>
#include <vector>

#include "floquet/operator_model.hpp"

namespace floquet {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    std::map<std::string, double> metrics;  // per-check residuals and timings
    double seconds = 0.0;
};

// Specs used by the suite; also written to specs/ for the CLI.
OperatorSpec cosine_spec();        // p = 2, q_2 = 2 cos 2 pi t
OperatorSpec mixed_spec();         // p = 2, q_1 and q_2 both nonzero
OperatorSpec decaying_spec(int p); // q_p with amplitudes 1/(1+n), n = 0..20

std::vector<int> acceptance_ids();
CheckResult run_check(int id);
std::vector<CheckResult> run_acceptance(const std::vector<int>& ids = acceptance_ids());

// Least-squares slope of log y against log x.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace floquet
