#include <iostream>
#include <string>
#include <vector>

#include "setchroma/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  setchroma::cli::Environment env;
#ifdef SETCHROMA_INJECT_FAULT
  env.inject_fault = true;
#endif
  return setchroma::cli::run(args, std::cout, std::cerr, env);
}
