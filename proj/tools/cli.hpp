#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabsym {

/*
 * Exit codes: 0 success (verify: all generators pass), 1 domain error or a
 * failed verification, 2 input/usage parse failure, 3 size cap exceeded where
 * verification was requested.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabsym
