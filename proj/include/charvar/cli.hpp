#ifndef CHARVAR_CLI_HPP
#define CHARVAR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace charvar {

/* Runs the command-line front end on an argv-style vector (without the
 * program name). Normal output goes to `out`, diagnostics to `err`.
 * Exit codes: 0 success, 1 verification mismatch, 2 usage error. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charvar

#endif
