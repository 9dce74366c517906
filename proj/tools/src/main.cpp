#include <iostream>

#include "qn/app/cli.hpp"

int main(int argc, char** argv) { return qn::app::run_cli(argc, argv, std::cout, std::cerr); }
