#include <iostream>

#include "abtess/cli.hpp"

int main(int argc, char** argv) { return abtess::run_cli(argc, argv, std::cout, std::cerr); }
