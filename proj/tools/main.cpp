#include <iostream>

#include "entwitness/cli.hpp"

int main(int argc, char** argv) {
  return entwitness::cli::run(argc, argv, std::cout, std::cerr);
}
