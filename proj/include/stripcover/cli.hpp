#pragma once

#include <iosfwd>

namespace stripcover {

// Command-line front end; returns the process exit code. Streams are injected
// so tests can drive the CLI in-process. Codes: 0 success; 1 internal failure
// (search did not converge, unexpected error); 2 usage, unreadable or
// malformed files; 3 infeasible or invalid inputs, impossible construction;
// 4 verification found uncovered points.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stripcover
