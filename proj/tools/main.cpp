#include <iostream>

#include "frieze/cli.hpp"

int main(int argc, char** argv) { return frieze::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
