#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mzr {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures; // first few failing cases

    bool ok() const { return failed == 0; }
};

struct SelftestOptions {
    std::uint32_t seed = 20240611;
    // Truncation used by the numeric suites.
    std::uint64_t truncation = 100'000;
};

// Runs the invariant suites: word algebra identities, stuffle laws, the
// classifier against the explicit depth-2/3 conditions, exact depth-2
// equivalence, trace replay, the depth/weight bound, and numeric
// cross-checks. Progress lines go to `log` when non-null.
std::vector<SuiteResult> run_selftest(const SelftestOptions &opts = {}, std::ostream *log = nullptr);

} // namespace mzr
