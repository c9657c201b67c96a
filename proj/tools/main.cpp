#include <iostream>

#include "thickset/cli.hpp"

int main(int argc, char** argv) { return thickset::runCli(argc, argv, std::cout, std::cerr); }
