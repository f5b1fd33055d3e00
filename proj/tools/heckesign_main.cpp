#include <iostream>

#include "heckesign/lab/cli.hpp"

int main(int argc, char** argv) { return heckesign::lab::run_cli(argc, argv, std::cout, std::cerr); }
