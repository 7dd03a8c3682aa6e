#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto outcome = ricci::cli::run(args);
  if (outcome.code == ricci::cli::kOk) {
    std::cout << outcome.out << std::flush;
  } else {
    std::cerr << outcome.err << std::flush;
  }
  return outcome.code;
}
