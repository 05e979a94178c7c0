#include "ballcalc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ballcalc::run_cli(argc, argv, std::cout, std::cerr); }
