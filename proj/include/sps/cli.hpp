#ifndef SPS_CLI_HPP
#define SPS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sps {

// Exit codes: 0 success, 1 usage error, 2 validation or verification
// failure, 3 I/O error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sps

#endif  // SPS_CLI_HPP
