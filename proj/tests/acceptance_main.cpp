// Runs the acceptance criteria and prints one line per check.
// Usage: floquet_acceptance [id ...]

#include <cstdio>
#include <cstdlib>
#include <string>

#include "floquet/acceptance.hpp"

int main(int argc, char** argv) {
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
    if (ids.empty()) ids = floquet::acceptance_ids();
    int failed = 0;
    for (int id : ids) {
        const floquet::CheckResult r = floquet::run_check(id);
        std::printf("[%s] %2d %-31s %7.1fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        if (!r.passed) ++failed;
    }
    std::printf("%zu checks, %d failed\n", ids.size(), failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
