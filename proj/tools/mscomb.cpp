#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return mscomb::cli::run_cli(argc, argv, std::cout, std::cerr);
}
