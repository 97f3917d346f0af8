#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mzr::cli {

// Exit statuses of run().
enum exit_code : int {
    ok = 0,
    singular_input = 1,
    usage_error = 2,
    regularity_violation = 3,
    selftest_failed = 4,
};

// Runs one `mzr` command. args excludes the program name.
//
//   classify -- n1 ... nr
//   reduce [--pivot leftmost|rightmost|j=K] [--format json|latex|plain] [--trace] -- n1 ... nr
//   eval [--N INT] [--cache PATH] -- n1 ... nr
//   table --depth D --min A --max B [--format json|csv] [--N INT] [--cache PATH]
//   selftest [--N INT] [--seed S]
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mzr::cli
