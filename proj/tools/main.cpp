#include <iostream>

#include "oddzeta/commands.hpp"

int main(int argc, char** argv) { return oddzeta::run_cli(argc, argv, std::cout, std::cerr); }
