#include <iostream>

#include "holo/cli/commands.hpp"

int main(int argc, char** argv) { return holo::cli::run(argc, argv, std::cout, std::cerr); }
