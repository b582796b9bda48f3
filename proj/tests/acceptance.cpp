// Runs every verification suite at full acceptance scale and prints one
// line per criterion. Exit status 0 iff all pass.

#include "chaingrid/verify.hpp"

#include <cstdio>

int main() {
    using namespace chaingrid;

    std::vector<Suite> suites = verification_suites();
    bool all_pass = true;
    int idx = 0;
    for (const Suite& suite : suites) {
        ++idx;
        SuiteOutcome outcome = run_suite(suite);
        long long millis = 0;
        std::string first_failure;
        for (const CheckOutcome& c : outcome.checks) {
            millis += c.millis;
            if (!c.pass && first_failure.empty()) first_failure = c.name;
        }
        bool pass = outcome.pass();
        all_pass = all_pass && pass;
        std::printf("criterion %2d  %-22s %s  (%lld ms%s%s)\n", idx, suite.name.c_str(),
                    pass ? "pass" : "FAIL", millis,
                    first_failure.empty() ? "" : ", first failing check: ",
                    first_failure.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "all acceptance criteria pass" : "ACCEPTANCE FAILURES");
    return all_pass ? 0 : 1;
}
