#include "qside/cli/run.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return qside::cli::main_entry(argc, argv, std::cout, std::cerr);
}
