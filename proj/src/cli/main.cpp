#include <iostream>

#include "fsig/cli/commands.hpp"

int main(int argc, char** argv) { return fsig::cli::run(argc, argv, std::cout, std::cerr); }
