#pragma once

#include <iosfwd>

namespace sketchgen::cli {

// Runs one subcommand. Returns 0 on success, 1 on bad input or usage,
// 2 on an internal error. Data goes to `out` (or files), diagnostics to `err`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sketchgen::cli
