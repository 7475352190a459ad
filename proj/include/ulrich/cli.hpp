#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Command-line front end.  Parsing and execution are separated from main()
// so tests can drive the full command surface in-process.
//
// Exit codes: 0 when every requested certification is verified or refuted as
// expected (and every explicit check holds), 1 when a certification
// mismatches or a checked condition fails, 2 for usage errors (unknown
// command or id, malformed class syntax, out-of-range caps).

namespace ulrich::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ulrich::cli
