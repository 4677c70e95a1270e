#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace pinnacle {

struct VerifyOptions {
    int n_max = 8;  // exhaustive suites scan S_n up to here (enumeration guard applies)
    int m_max = 12; // correspondence suite covers sets with max <= m_max
    int jobs = 1;
    std::vector<std::string> suites; // empty = run all
};

struct CheckFailure {
    std::string suite;
    std::string detail;
};

struct VerifyReport {
    std::vector<std::string> suites_run;
    std::uint64_t checks = 0;
    std::vector<CheckFailure> failures;
    std::set<std::string> coverage; // public operations a run exercised

    bool ok() const { return failures.empty(); }
};

std::vector<std::string> all_suites();

// every public operation; a full run must cover all of them
std::vector<std::string> all_public_operations();

// cross-checks the whole library against independent definitions; the
// "lifting" suite checks a claimed product rule that is genuinely false,
// so a full run reports its counterexamples
VerifyReport run_verify(const VerifyOptions& opt = {});

} // namespace pinnacle
