#pragma once

#include <ostream>

namespace ckf::cli {

/// Exit codes: 0 success, 1 a certificate component failed its tolerance, 2 bad flags.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ckf::cli
