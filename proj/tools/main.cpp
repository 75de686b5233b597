#include <iostream>

#include "fastmis/cli.hpp"

int main(int argc, char** argv) { return fastmis::run_cli(argc, argv, std::cout, std::cerr); }
