#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "roman/generator.hpp"

namespace roman {

// Stable exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,        // usage or parse error
    kExitVerification = 2, // mismatch, invalid RDF, non-convex input
    kExitTooLarge = 3,     // resource cap exceeded
};

// Entry point shared by the binary and the tests. Streams are injected so
// tests can capture output in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Per-trial instance derivation used by `compare`, shared so test harnesses
// can replay the exact trial stream of a given seed.
GenConfig compare_trial_config(SplitMix64& rng, int max_m, int max_n);

}  // namespace roman
