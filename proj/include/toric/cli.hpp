/// @file cli.hpp
/// @brief Subcommand dispatch for the toricimp tool, exposed as a library
/// function so tests can run invocations in-process.

#pragma once

#include <string>
#include <vector>

namespace toric {

struct CliResult {
    int code = 0;     // 0 success/PASS, 1 verification FAIL, 2 usage/hypothesis error
    std::string out;  // everything the tool would print
};

/// Runs one invocation; `args` excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace toric
