#include <iostream>

#include "semigrace/cli.hpp"

int main(int argc, char** argv) {
  return semigrace::cli::run(argc, argv, std::cout, std::cerr);
}
