// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. `planiv selftest` runs the same corpus.

#include <cstdio>

#include "planiv/corpus.hpp"

int main() {
    auto results = planiv::corpus::run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s %s — %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        all = all && r.pass;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
