#include <iostream>

#include "maxres/cli.hpp"

int main(int argc, char** argv) { return maxres::run_cli(argc, argv, std::cout, std::cerr); }
