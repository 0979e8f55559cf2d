#include <iostream>

#include "qramsey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qramsey::cli::run(args, std::cout, std::cerr);
}
