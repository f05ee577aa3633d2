#include <string>
#include <vector>

#include "sensnet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sensnet::cli_main(args);
}
