#pragma once

#include <iosfwd>

namespace qmi {

// Runs one `qmi` command. JSON results go to `out`; errors are written to
// `err` as {"error": code, "detail": text}. Returns 0 on success, 1 on a
// domain error and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qmi
