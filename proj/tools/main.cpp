#include <iostream>

#include "odometer/cli.hpp"

int main(int argc, char** argv) { return odometer::cli::run(argc, argv, std::cout, std::cerr); }
