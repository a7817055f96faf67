#include <iostream>

#include "qmi/cli.hpp"

int main(int argc, char** argv) { return qmi::run_cli(argc, argv, std::cout, std::cerr); }
