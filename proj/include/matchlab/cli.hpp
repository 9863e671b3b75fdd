#pragma once

#include <iosfwd>
#include <string>

#include "matchlab/graph.hpp"

namespace matchlab {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitSizeError = 2;

/// Parses "u-v,u-v,..." (whitespace ignored). "" and "none" give the empty set.
EdgeSet parse_edge_spec(const std::string& text);

/// Runs the `matchlab` command line. Reports go to `out` (or the --out file),
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matchlab
