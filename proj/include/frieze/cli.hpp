#pragma once

#include <istream>
#include <ostream>

namespace frieze::cli {

/// Runs one `frieze` subcommand. Returns 0 on success, 1 on a domain error
/// (one `error: <Kind>: <message>` line on `err`), 2 on a usage error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace frieze::cli
