#pragma once
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/complex.hpp"
#include "hh/group.hpp"

namespace hh {

// Simplices are sorted tuples of vertex indices; the order of `vertices` is the
// global vertex order and fixes every orientation.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Throws InvalidComplex on unknown or repeated vertices.
  static SimplicialComplex from_facets(std::vector<std::string> vertices, std::vector<std::vector<int>> facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int dimension() const { return int(simplices_.size()) - 1; }
  const std::vector<std::vector<int>>& simplices(int k) const { return simplices_[k]; }
  std::size_t count(int k) const { return k < 0 || k > dimension() ? 0 : simplices_[k].size(); }
  long index(const std::vector<int>& s) const;  // position among simplices of its dimension, or -1
  long euler_characteristic() const;
  std::string label(const std::vector<int>& s) const;

  bool operator==(const SimplicialComplex& o) const { return vertices_ == o.vertices_ && facets_ == o.facets_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<int>> facets_;                  // maximal simplices, sorted
  std::vector<std::vector<std::vector<int>>> simplices_;  // per dimension, lexicographic
};

// Simplicial cochains with the coboundary (d f)(v_0..v_k) = sum (-1)^i f(..omit v_i..).
CochainComplex simplicial_cochains(const SimplicialComplex& K, Ring r);

// Cochain algebra with the Alexander-Whitney cup product
// e_s . e_t = e_{s u t} when max(s) = min(t) and s u t is a simplex. The unit
// (sum of the vertices) replaces the first vertex and is labelled "1"; the basis
// is then sorted by label.
FiniteDgAlgebra cochain_algebra(const SimplicialComplex& K, Ring r);

// Vertices = simplices of K ordered by (dimension, position); simplices = chains of faces.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& K);

struct SimplicialAction {
  FiniteGroupData group;
  std::vector<std::vector<int>> perm;  // perm[g][v]
  std::vector<int> apply(int g, const std::vector<int>& s) const;  // sorted image
};

// Throws NotSimplicial when some simplex is not sent to a simplex, InvalidAction
// when the permutations do not form a representation of the group.
SimplicialAction simplicial_action(const SimplicialComplex& K, const FiniteGroupData& G,
                                   std::vector<std::vector<int>> perm);
// The action extended to the subdivision.
SimplicialAction subdivided_action(const SimplicialComplex& K, const SimplicialAction& act);

struct InducedAction {
  SimplicialAction simplicial;
  AlgebraAction algebra;     // (g.f)(s) = f(g^-1 s) with orientation signs, on cochain_algebra(K, r)
  ValidationReport report;   // validate_action; the cup product is preserved only when every
                             // g preserves the vertex order on each simplex
};
InducedAction induced_action(const SimplicialComplex& K, const FiniteGroupData& G, std::vector<std::vector<int>> perm,
                             Ring r);

// Throws NotFree when some g != e fixes a simplex, OrbitCollision when a
// simplex meets an orbit twice or two simplex orbits have the same vertex orbits.
SimplicialComplex quotient_complex(const SimplicialComplex& K, const SimplicialAction& act);

}  // namespace hh
