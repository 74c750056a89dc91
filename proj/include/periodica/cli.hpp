#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace periodica {

// Exit codes: 0 success, 2 validation error, 3 internal error or failed verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace periodica
