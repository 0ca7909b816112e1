#include <iostream>

#include "conicring/cli.hpp"

int main(int argc, char** argv) { return conicring::cli::run(argc, argv, std::cout, std::cerr); }
