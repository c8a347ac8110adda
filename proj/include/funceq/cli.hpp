#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace funceq::cli {

/// Runs the command-line tool on already-split arguments (argv[0] excluded).
/// The JSON result document goes to `out`, logs and errors to `err`.
/// Returns 0 on pass/informational, 1 on a failed mathematical check, 2 on
/// usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace funceq::cli
