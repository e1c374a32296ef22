#include <iostream>

#include "polycount_cli/cli.hpp"

int main(int argc, char** argv) { return polycount::cli::run(argc, argv, std::cout, std::cerr); }
