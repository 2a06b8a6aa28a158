#include <iostream>

#include "suite.hpp"

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : HH_FIXTURE_DIR;
  bool all = true;
  hh::verify::run_acceptance(dir, [&](const hh::verify::CriterionResult& r) {
    std::cout << hh::verify::format(r) << std::endl;
    all = all && r.pass;
  });
  return all ? 0 : 1;
}
