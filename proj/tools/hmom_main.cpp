#include <iostream>

#include "hmom/cli.hpp"

int main(int argc, char** argv) { return hmom::run_cli(argc, argv, std::cout, std::cerr); }
