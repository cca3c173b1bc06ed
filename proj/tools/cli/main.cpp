#include <iostream>

#include "cli/cli.hpp"

int main(int argc, char** argv) { return sketchgen::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
