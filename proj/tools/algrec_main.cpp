#include "algrec/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return algrec::run_cli(argc, argv, std::cout, std::cerr); }
