#include <iostream>

#include "arad/cli.hpp"

int main(int argc, char** argv) { return arad::run_cli(argc, argv, std::cout, std::cerr); }
