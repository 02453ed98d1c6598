#include <iostream>

#include "immaculata_cli.hpp"

int main(int argc, char **argv) { return immaculata::cli::run(argc, argv, std::cout, std::cerr); }
