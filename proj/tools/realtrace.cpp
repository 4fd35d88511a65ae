#include <iostream>

#include "realtrace/cli.hpp"

int main(int argc, char** argv) {
  return realtrace::dispatch(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
