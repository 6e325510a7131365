#pragma once

#include <iosfwd>

namespace setmosaic::cli {

// Entry point behind the setmosaic binary. Subcommands: render, query,
// stats, quiz. Returns 0 on success, 1 on usage errors, 2 on data errors.
// Results go to `out` (or the file given with -o); diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace setmosaic::cli
