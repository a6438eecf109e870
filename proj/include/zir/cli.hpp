#pragma once

#include <ostream>

namespace zir {

/// Entry point of the command-line tool. Returns 0 on success, 1 when a check
/// or table comparison fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zir
