#include <iostream>

#include "orliczsm/cli.hpp"

int main(int argc, char** argv) { return orliczsm::cli::run(argc, argv, std::cout, std::cerr); }
