#pragma once

#include <iosfwd>

namespace dgc {

// Returns 0 on success, 1 on validation errors, 2 on numerical failures.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace dgc
