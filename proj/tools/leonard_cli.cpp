#include <iostream>

#include "leonard/cli.hpp"

int main(int argc, char** argv) { return leonard::cli::main_entry(argc, argv, std::cin, std::cout, std::cerr); }
