#include <iostream>

#include "ou/cli.hpp"

int main(int argc, char** argv) { return ou::cli::run(argc, argv, std::cout, std::cerr); }
