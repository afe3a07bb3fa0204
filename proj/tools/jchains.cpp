#include <iostream>

#include "jchains/cli.hpp"

int main(int argc, char** argv) { return jchains::run_cli(argc, argv, std::cout, std::cerr); }
