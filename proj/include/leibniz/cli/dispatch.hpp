#ifndef LEIBNIZ_CLI_DISPATCH_HPP
#define LEIBNIZ_CLI_DISPATCH_HPP

#include <iosfwd>

namespace leibniz::cli {

/// Parses the command line, runs the command and writes its report to out.
/// Returns 0 iff the report passes; usage errors return CLI11's exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace leibniz::cli

#endif
