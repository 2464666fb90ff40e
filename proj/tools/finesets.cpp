#include <iostream>

#include "finesets/cli.hpp"

int main(int argc, char** argv) { return finesets::cli::run(argc, argv, std::cout, std::cerr); }
