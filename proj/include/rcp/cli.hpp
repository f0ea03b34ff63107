#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rcp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kParse = 2, kInvariant = 3 };

/// Entry point of the `rcp` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Up to `limit` labels closest to `query` by edit distance.
std::vector<std::string> near_matches(const std::string& query,
                                      const std::vector<std::string>& labels,
                                      std::size_t limit = 5);

}  // namespace rcp::cli
