#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace solvsym::cli {

/// Runs one CLI invocation. Exit code 0: predicate true / verdict clean;
/// 1: predicate false / hypothesis failed / operational failure;
/// 2: usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace solvsym::cli
