#pragma once

#include <iosfwd>

namespace chaoseed::cli {

/// Entry point of the chaoseed tool: gen, place, stats, bifurcate, serve.
/// Returns the process exit code; diagnostics go to `err` as one line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chaoseed::cli
