#include <iostream>
#include <string>
#include <vector>

#include "patchpencil/cli/run.h"

int main(int argc, char** argv) {
  return patchpencil::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
