#pragma once

#include <iosfwd>

namespace thickset {

// Parses argv, runs the selected operation, and writes the report to --out
// (stdout when omitted). Returns the process exit code: 0 pass/SAT,
// 1 fail/UNSAT, 2 usage error, 3 budget exhaustion. A report is written on
// 0, 1 and 3; usage errors only print a diagnostic.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thickset
