#pragma once

#include <string>
#include <vector>

namespace recomb {

struct CheckResult {
    int criterion = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    int count_n_max = 16;
    int threads = 0;  // 0: enumeration_threads()
    unsigned seed = 20240611;
};

CheckResult check_xer_application();
CheckResult check_lemma_equivalences();
CheckResult check_clasp_mcn();
CheckResult check_calibration();
CheckResult check_theorem_mcn();
CheckResult check_growth(const VerifyOptions& opt = {});
CheckResult check_oracle(const VerifyOptions& opt = {});

// Criteria 1 to 7 in order, then the offline-surrogate statement.
std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

}  // namespace recomb
