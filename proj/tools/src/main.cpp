#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return gafunc::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
