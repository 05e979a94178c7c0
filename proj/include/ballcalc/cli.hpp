#pragma once

// Command line frontend. run_cli parses argv, runs one subcommand and writes
// a human table or JSON to out. Exit codes: 0 success, 1 usage error,
// 2 a verification subcommand found its assertion false.

#include <ostream>

namespace ballcalc {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ballcalc
