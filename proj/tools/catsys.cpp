#include <iostream>

#include "catsys/cli.hpp"

int main(int argc, char** argv) { return catsys::cli::main(argc, argv, std::cout, std::cerr); }
