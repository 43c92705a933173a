#include <iostream>

#include "sfab/cli.hpp"

int main(int argc, char** argv) { return sfab::cli::run(argc, argv, std::cout, std::cerr); }
