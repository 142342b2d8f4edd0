#include <iostream>
#include <string>
#include <vector>

#include "parembed/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parembed::run(args, std::cout, std::cerr);
}
