#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grundy::cli {

/// Runs one CLI invocation; args excludes the program name. The
/// machine-readable JSON report goes to `out` (unless --format text),
/// diagnostics go to `err`. Exit codes: 0 success / every requested check
/// passed, 1 domain failure (not chordal, falsified check, oracle cap),
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grundy::cli
