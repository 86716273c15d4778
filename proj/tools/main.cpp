#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return convexgeo::run_cli(argc, argv, std::cout, std::cerr); }
