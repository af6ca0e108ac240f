#ifndef ILX_CLI_HPP
#define ILX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ilx {

// Entry point of the `ilx` tool. Artifacts go to `out`, diagnostics to
// `err`. Returns 0 (success), 1 (errors in the input) or 2 (usage or I/O).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ilx

#endif  // ILX_CLI_HPP
