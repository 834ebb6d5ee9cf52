#include <cstdio>
#include <cstdlib>

#include "recomb/verification.hpp"

// Criteria with no offline check; reported but not counted against the exit status.
constexpr int kInformational = 8;

int main(int argc, char** argv) {
    recomb::VerifyOptions opt;
    if (argc > 1) opt.count_n_max = std::atoi(argv[1]);
    int failed = 0;
    for (const auto& c : recomb::run_verification(opt)) {
        std::printf("%s criterion %d: %s (%s, %.2f s)\n", c.passed ? "PASS" : "FAIL", c.criterion, c.title.c_str(),
                    c.detail.c_str(), c.seconds);
        if (!c.passed && c.criterion != kInformational) ++failed;
    }
    std::printf("%d criteria failed\n", failed);
    return failed ? 1 : 0;
}
