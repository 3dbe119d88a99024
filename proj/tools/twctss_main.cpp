#include <iostream>
#include <string>
#include <vector>

#include "twctss/toolkit.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const twctss::CliOutput result = twctss::run_cli(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
