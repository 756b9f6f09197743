#include <iostream>

#include "experiment.hpp"

int main(int argc, char** argv) { return gibbs::cli_main(argc, argv, std::cout, std::cerr); }
