#include <iostream>

#include "ncroots/cli.hpp"

int main(int argc, char** argv) { return ncroots::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
