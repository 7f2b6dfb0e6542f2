#include <iostream>

#include "twinless/cli.hpp"

int main(int argc, char** argv) { return twinless::run_cli(argc, argv, std::cout, std::cerr); }
