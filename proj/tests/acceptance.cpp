// Acceptance battery: runs every pinned criterion and prints one pass/fail
// line per criterion. Exit status is the number of failed criteria.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "verify/verify.hpp"

int main(int argc, char** argv) {
    int threads = 0;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (!std::strncmp(argv[i], "--threads=", 10)) threads = std::atoi(argv[i] + 10);
        if (!std::strncmp(argv[i], "--only=", 7)) only = std::atoi(argv[i] + 7);
    }

    int failures = 0;
    for (int id = 1; id <= autoseq::num_criteria(); ++id) {
        if (only && id != only) continue;
        auto res = autoseq::run_criterion(id, threads);
        std::printf("%s  [A%02d] %s (%zu checks, %.1fs)\n", res.pass ? "PASS" : "FAIL", res.id,
                    res.title.c_str(), res.checks.size(), res.seconds);
        if (!res.pass) {
            ++failures;
            for (const auto& check : res.checks) {
                if (!check.pass)
                    std::printf("      failed: %s -- %s\n", check.name.c_str(),
                                check.detail.c_str());
            }
        }
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
