#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walksearch::cli {

/// Parses and runs one command. args excludes the program name. Returns the
/// process exit status; every failure prints exactly one diagnostic line to
/// err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walksearch::cli
