#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cagames {

// Exit codes: 0 success (verification subcommands: empty mismatch report),
// 1 domain error or failed verification, 2 resource-guard refusal.
int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cagames
