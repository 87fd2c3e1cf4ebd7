#include <iostream>

#include "quon/cli.hpp"

int main(int argc, char** argv) { return quon::cli::run_cli(argc, argv, std::cout, std::cerr); }
