#pragma once

#include <ostream>

namespace convexgeo {

// Entry point of the convexgeo command. Exit codes: 0 success or verify
// pass, 1 verify fail or a library error, 2 usage, parse or file errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convexgeo
