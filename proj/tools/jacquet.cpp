#include <iostream>

#include "jacquet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jacquet::cli_main(args, std::cout, std::cerr);
}
