// Runs the acceptance checks at their full default ranks and prints one
// pass/fail line per criterion. An optional argument restricts the run to a
// single criterion number.

#include "coxfactor/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    const auto& names = coxfactor::verify_suite_names();
    std::string suite = "all";
    if (argc > 1) {
        int number = std::atoi(argv[1]);
        if (number < 1 || number > static_cast<int>(names.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0],
                         names.size());
            return 2;
        }
        suite = names[number - 1];
    }
    bool all_ok = true;
    for (const auto& r : coxfactor::run_verify(suite, {})) {
        std::printf("[%s] %d. %s: %s\n", r.passed ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.detail.c_str());
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}
