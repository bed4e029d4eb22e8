#pragma once

#include <ostream>

namespace lpgraph {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs the lpgraph command line: info, ys, seed, mutate, exchange-graph,
/// verify, freeze, conjectures, serve. Output goes to `out`, diagnostics to
/// `err`.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lpgraph
