#pragma once
#include <functional>
#include <string>
#include <vector>

#include "hh/group.hpp"

namespace hh::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::string format(const CriterionResult& r);  // one line

// Bundled algebra-group-action triples with dim(A) |G| <= 8.
struct Triple {
  std::string name;
  FiniteDgAlgebra A;
  AlgebraAction act;
};
std::vector<Triple> bundled_triples(const std::string& fixture_dir);

// Runs the acceptance criteria in order; `each` sees every result as it finishes.
std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir,
                                            const std::function<void(const CriterionResult&)>& each = {});

}  // namespace hh::verify
