#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace defsem::cli {

// Exit codes: 0 success/equivalent, 1 domain error, 2 usage error,
// 3 not equivalent or a failed check.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace defsem::cli
