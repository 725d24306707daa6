#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tglab {

/// Command-line front end: every decision procedure behind one JSON-in,
/// JSON-out dispatcher. Returns the process exit code:
///   0  decided true / closed / included / consistent
///   1  decided false / violation found
///   2  unknown (sufficient inclusion check only)
///   64 usage error
///   65 malformed input file
///   70 a --universe cross-check disagreed with the exact procedure
/// The verdict JSON goes to `out`; human-readable notes go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tglab
