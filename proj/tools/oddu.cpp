#include <iostream>
#include <string>
#include <vector>

#include "oddu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oddu::run_cli(args, std::cout, std::cerr);
}
