#include <iostream>

#include "qalpha/cli.hpp"

int main(int argc, char** argv) { return qalpha::cli::run(argc, argv, std::cout, std::cerr); }
