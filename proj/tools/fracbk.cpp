#include <iostream>

#include "fracbk/cli.hpp"

int main(int argc, char** argv) { return fracbk::run_cli(argc, argv, std::cout, std::cerr); }
