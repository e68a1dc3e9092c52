#include <iostream>

#include "dualspline/cli/commands.hpp"

int main(int argc, char** argv) { return dualspline::cli::run(argc, argv, std::cout, std::cerr); }
