#include <iostream>
#include <string>
#include <vector>

#include "qsl/cli.hpp"

int main(int argc, char** argv) {
  return qsl::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
