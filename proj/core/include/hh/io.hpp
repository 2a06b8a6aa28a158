#pragma once
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/group.hpp"
#include "hh/simplicial.hpp"

namespace hh::io {

// JSON documents. Every parser throws ParseError naming the offending field
// (or the line and column for syntax errors) and ValidationError when the
// parsed object fails its validator.
//
//   algebra  {type, ring, basis:[{label, degree}], unit, mult:[[i, j, [{k, coeff}]]],
//             diff:[[i, [{j, coeff}]]], augmentation?}
//   group    {type, elements:[labels], table:[[index]]}
//   action   {type, algebra, group, matrices}   column j of matrices[g] = g(e_j)
//   complex  {type, vertices:[labels], facets:[[vertex]]}
//   scenario {type, name, complex, group, permutations, ring?, bar_truncation?,
//             group_truncation?, degrees?}
// In actions and scenarios, the referenced objects are either inline or file
// paths relative to the referencing file. Coefficients are integers or "p/q".

FiniteDgAlgebra parse_algebra(const std::string& text);
FiniteGroupData parse_group(const std::string& text);
SimplicialComplex parse_complex(const std::string& text);

struct ActionDocument {
  FiniteDgAlgebra algebra;
  AlgebraAction action;
};
ActionDocument parse_action(const std::string& text, const std::string& base_dir = ".");

struct Scenario {
  std::string name;
  SimplicialComplex complex;
  FiniteGroupData group;
  std::vector<std::vector<int>> permutations;  // permutations[g][v]
  std::string ring;                            // empty when unspecified
  int bar_truncation = -1, group_truncation = -1;
  bool has_degrees = false;
  int lo = 0, hi = 0;
};
Scenario parse_scenario(const std::string& text, const std::string& base_dir = ".");

std::string serialize(const FiniteDgAlgebra& a);
std::string serialize(const FiniteGroupData& g);
std::string serialize(const SimplicialComplex& k);
std::string serialize(const ActionDocument& d);
std::string serialize(const Scenario& s);

// "algebra", "group", "action", "complex", "scenario"; inferred from the keys
// when the type field is absent
std::string document_type(const std::string& text);

std::string read_file(const std::string& path);  // throws ParseError when unreadable
std::string directory_of(const std::string& path);

// Recast coefficients in another ring; throws InvalidRing when they do not fit.
FiniteDgAlgebra change_ring(const FiniteDgAlgebra& a, Ring r);
AlgebraAction change_ring(const AlgebraAction& act, Ring r);

}  // namespace hh::io
