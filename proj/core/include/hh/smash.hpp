#pragma once
#include "hh/algebra.hpp"
#include "hh/group.hpp"

namespace hh {

// A#G with basis (a, g) at index a * |G| + g, product (x#g)(y#h) = x g(y) # gh.
struct SmashAlgebra {
  FiniteDgAlgebra base;
  AlgebraAction action;
  FiniteDgAlgebra algebra;

  const FiniteGroupData& group() const { return action.group; }
  std::size_t index(std::size_t a, int g) const { return a * group().order() + std::size_t(g); }
};

// Throws InvalidAction when the action does not validate.
SmashAlgebra smash_product(const FiniteDgAlgebra& A, const AlgebraAction& act);

// A_g: left action a.x = a x, right action x.a = x g(a)
DgBimodule twisted_bimodule(const FiniteDgAlgebra& A, const AlgebraAction& act, int g);

// A#G as an A-bimodule through A -> A#G, a -> a#e
DgBimodule smash_bimodule(const SmashAlgebra& S);

// k.(x#h) = k(x) # k h k^-1, an action of G on A#G by algebra automorphisms
AlgebraAction conjugation_action(const SmashAlgebra& S);

struct ConjugacyData {
  std::vector<std::vector<int>> classes;
  std::vector<int> representatives;
  std::vector<std::vector<int>> centralizers;
};
ConjugacyData conjugacy_data(const FiniteGroupData& G);

}  // namespace hh
