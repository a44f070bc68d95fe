#include <iostream>

#include "g3tss/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return g3::cli::run(argc, argv, std::cout, std::cerr);
}
