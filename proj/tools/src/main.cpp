#include <iostream>

#include "stechkin_cli/cli.hpp"

int main(int argc, char** argv) { return stechkin::cli::run(argc, argv, std::cout, std::cerr); }
