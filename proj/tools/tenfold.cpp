#include <iostream>

#include "tenfold/cli.hpp"

int main(int argc, char** argv) { return tenfold::run_cli(argc, argv, std::cout, std::cerr); }
