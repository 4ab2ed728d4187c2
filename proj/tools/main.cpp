#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return cogclust::cli::main(argc, argv, std::cout, std::cerr); }
