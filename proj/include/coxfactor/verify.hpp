#pragma once

#include <string>
#include <vector>

namespace coxfactor {

struct CheckResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // summary when passed, first failures otherwise
};

struct VerifyOptions {
    // 0 runs the full default rank schedule; a positive value caps the
    // enumerated ranks (each family keeps at least its smallest rank).
    int max_rank = 0;
    unsigned rng_seed = 20260814;
    int random_graphs = 200;
    int threads = 1;
};

// Suite names in report order; run_verify also accepts "all".
const std::vector<std::string>& verify_suite_names();

std::vector<CheckResult> run_verify(const std::string& suite,
                                    const VerifyOptions& opt = {});

}  // namespace coxfactor
