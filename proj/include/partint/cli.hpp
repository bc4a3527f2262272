#ifndef PARTINT_CLI_HPP
#define PARTINT_CLI_HPP

#include <iosfwd>

namespace partint {

// Exit codes: 0 all claims hold / solved, 1 mathematical failure (SUSPECT
// case, singular or inconsistent system), 2 usage or malformed input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace partint

#endif
