#include <iostream>

#include "vc/cli.hpp"

int main(int argc, char** argv) { return vc::cli::run(argc, argv, std::cout, std::cerr); }
