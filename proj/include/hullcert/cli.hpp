#ifndef HULLCERT_CLI_HPP
#define HULLCERT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hullcert {

/// Runs the command line given the argument list (without the program name).
/// Exit codes: 0 Holds/Certified, 1 Fails/Refuted, 2 Indeterminate,
/// 3 usage or precondition error. Reports are byte-deterministic for
/// identical inputs and seeds.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hullcert

#endif
