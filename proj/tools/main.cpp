#include <iostream>

#include "toriclog/cli.hpp"

int main(int argc, char** argv) { return toriclog::run_cli(argc, argv, std::cout, std::cerr); }
