#include <iostream>

#include "zir/cli.hpp"

int main(int argc, char** argv) { return zir::run_cli(argc, argv, std::cout, std::cerr); }
