// cli.hpp — command dispatch for the omech tool

#pragma once

#include <string>
#include <vector>

namespace omech::cli {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 2 configuration/usage error, 3 physics-domain error
// (unphysical state or unstable dynamics), 4 numerical non-convergence,
// 5 I/O error.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 2,
    kPhysicsError = 3,
    kConvergenceError = 4,
    kIoError = 5,
};

/// Runs one command line (argv-style, without the program name) and returns
/// the exit status. All randomness is controlled by --seed; equal inputs
/// produce byte-identical output files.
int run_cli(const std::vector<std::string>& args);

int run_cli(int argc, char** argv);

} // namespace omech::cli
