#pragma once

#include <ostream>

namespace sdrep::cli {

// Exit codes: 0 success, 1 failed check, 2 usage or input error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace sdrep::cli
