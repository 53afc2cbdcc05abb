#pragma once

#include <iosfwd>

namespace arboreal {

/// Exit codes: 0 all checks pass, 1 check failure, 2 usage or config error,
/// 3 certification failure.
int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace arboreal
