#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace feqs {

/// Entry point behind the feqs binary. Returns the process exit code:
/// 0 success / all checks passed, 1 a check or validation failed,
/// 2 usage or input errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feqs
