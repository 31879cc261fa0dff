#include <iostream>

#include "padicvoa_cli/cli.hpp"

int main(int argc, char** argv) { return padicvoa::cli::run(argc, argv, std::cout, std::cerr); }
