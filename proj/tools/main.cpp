#include <iostream>

#include "chevalley/cli.hpp"

int main(int argc, char** argv) { return chevalley::cli::run(argc, argv, std::cout, std::cerr); }
