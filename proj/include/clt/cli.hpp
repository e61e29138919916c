#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace clt {

// Exit contract: 0 provable / valid / ok, 1 unprovable / lost by the
// machine / failed check, 2 input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clt
