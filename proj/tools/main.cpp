#include "switchopt/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return switchopt::cli_main(argc, argv, std::cout, std::cerr); }
