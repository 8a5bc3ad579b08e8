#pragma once

// Command dispatch for the phi-irred tool. Exit codes for `certify`:
//   0 IRREDUCIBLE, 2 HYPOTHESIS_FAILED, 3 INCONCLUSIVE, 1 input or internal error.

#include "phiirred/execution.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace phiirred {

inline constexpr const char* kHermiteSchema = "phi-hermite/1";

struct ExampleRow {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    /// Extra lines printed under the row (search logs).
    std::vector<std::string> detail;
};

/// The built-in example suite behind `paper-examples`, in a fixed order.
std::vector<ExampleRow> example_suite_rows(Execution exec = Execution::parallel);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phiirred
