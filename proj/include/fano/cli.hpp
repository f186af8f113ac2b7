#ifndef FANO_CLI_HPP
#define FANO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fano {

/// Runs the `fano` command line. Returns 0 on success, 1 on a domain error
/// and 2 on a usage error; reports go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with argv[0] supplied.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fano

#endif // FANO_CLI_HPP
