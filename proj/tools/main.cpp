#include <iostream>

#include "sylowlens/cli.hpp"

int main(int argc, char** argv) { return sylowlens::run_cli(argc, argv, std::cout, std::cerr); }
