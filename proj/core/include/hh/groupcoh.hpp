#pragma once
#include <functional>
#include <optional>

#include "hh/complex.hpp"
#include "hh/group.hpp"

namespace hh {

// Homogeneous bar resolution of Z over ZG: degree k has Z-basis the tuples
// (h_0, ..., h_k), boundary sum_j (-1)^j (.. omit h_j ..), diagonal G-action.
// The normalized version drops tuples with two equal neighbours.
struct GroupBarResolution {
  FiniteGroupData group;
  int N = 0;
  bool normalized = true;
  std::vector<std::vector<std::vector<int>>> basis;  // basis[k]
  std::vector<ExactMatrix> boundary;                 // boundary[k] : B_{k+1} -> B_k
  ExactMatrix augmentation;                          // B_0 -> Z

  std::size_t free_rank(int k) const { return basis[k].size() / group.order(); }
};

GroupBarResolution group_bar_resolution(const FiniteGroupData& G, int N, bool normalized = true);
// The augmented complex is exact below degree N; returns the first failing degree otherwise.
std::optional<int> resolution_defect(const GroupBarResolution& r);

// A complex X with a left action of a subgroup H <= G commuting with d.
// action[g][q - X.lo] is the matrix of g on X^q for g in H (empty otherwise).
struct GComplex {
  FiniteGroupData group;
  std::vector<int> subgroup;  // sorted element indices, contains the identity
  CochainComplex X;
  std::vector<std::vector<ExactMatrix>> action;
  // lowest degree of the untruncated X, if bounded below
  std::optional<int> min_degree;
  // equivariant product X^q x X^q' -> X^{q+q'}, when X is a module ring
  std::function<Vec(int, const Vec&, int, const Vec&)> product;

  const ExactMatrix& act(int g, int q) const { return action[g][q - X.lo]; }
  bool in_range(int q) const { return q >= X.lo && q <= X.hi(); }
};

// single module concentrated in degree 0 with matrices for every element of G
GComplex module_complex(const FiniteGroupData& G, Ring r, std::vector<ExactMatrix> mats);
GComplex trivial_module(const FiniteGroupData& G, Ring r);
// ZG with k.h = k h k^-1 and its ring structure
GComplex conjugation_module(const FiniteGroupData& G, Ring r);
GComplex restrict_to(const GComplex& W, const std::vector<int>& subgroup);

// Normalized inhomogeneous cochains Maps((H \ e)^p, X^q), p <= NG, totalized:
//   D = delta_G + (-1)^p d_X,
//   (delta a)(h_1..h_{p+1}) = h_1.a(h_2..) + sum_i (-1)^i a(..h_i h_{i+1}..) + (-1)^{p+1} a(h_1..h_p)
class GroupCochains {
 public:
  struct Block {
    int p, q;
    std::size_t offset, tuples, xdim;
  };

  GroupCochains(GComplex W, int NG, int lo, int hi);

  const GComplex& coefficients() const { return W_; }
  int NG() const { return NG_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t dim(int n) const;
  const std::vector<Block>& blocks(int n) const { return blocks_[n - lo_]; }
  const Block* block(int n, int p) const;
  ExactMatrix differential(int n) const;
  CochainComplex complex() const;
  // (a.b)(h_1..h_{p+p'}) = (-1)^{q p'} a(h_1..h_p) * ((h_1...h_p) . b(h_{p+1}..))
  Vec product(int n, const Vec& a, int m, const Vec& b) const;

  const std::vector<int>& nonidentity() const { return nonid_; }
  std::vector<int> tuple(int p, std::size_t idx) const;
  long tuple_index(const std::vector<int>& t) const;  // -1 if some entry is e or outside H

 private:
  GComplex W_;
  int NG_, lo_, hi_;
  std::vector<int> nonid_;
  std::vector<long> pos_;  // G element -> position in nonid_, or -1
  std::vector<std::vector<Block>> blocks_;
};

// Whether degree m of the untruncated cochains receives no tuples longer than NG.
bool group_complete(const GComplex& W, int NG, int m);

Vec restrict_cochain(const GroupCochains& from, const GroupCochains& to, int n, const Vec& v);
// transfer from the subgroup cochains `sub` to the ambient cochains `ambient`
Vec corestrict_cochain(const GroupCochains& ambient, const GroupCochains& sub, int n, const Vec& v);

struct ProductEntry {
  int deg_a;
  std::size_t a;
  int deg_b;
  std::size_t b;
  std::vector<Rat> coords;  // in the generators of degree deg_a + deg_b
};

struct GroupCohomologyResult {
  int NG = 0;
  std::vector<DegreeCohomology> degrees;
  std::vector<ProductEntry> products;
  const DegreeCohomology* at(int n) const;
};

// Products of generator pairs whose degrees sum into the interior of the window.
std::vector<ProductEntry> product_table(const CochainComplex& c, int lo, int hi,
                                        const std::function<Vec(int, const Vec&, int, const Vec&)>& mul);

// H^*(H; X) in degrees [lo, hi] with certificates: proved when no tuple length
// beyond NG reaches the degree, certified when NG - 1 gives the same group.
GroupCohomologyResult ext_over_zg(const GComplex& W, int NG, int lo, int hi, bool products = false);

// Period-2 oracle for cyclic G: W --(g-1)--> W --(norm)--> W --(g-1)--> ...
std::vector<DegreeCohomology> periodic_cyclic_cohomology(const GComplex& W, int lo, int hi);

struct PullPushResult {
  std::vector<int> representatives;
  std::vector<GroupCohomologyResult> summands;  // H^*(C(g)) for each representative
  std::vector<DegreeCohomology> total;
  // abelian G: [g]a . [h]b = [gh](a.b); generators ordered by (group element, class generator)
  std::vector<ProductEntry> products;
  bool has_products = false;
};
PullPushResult pullpush_hh_group_ring(const FiniteGroupData& G, Ring r, int NG, int lo, int hi);

// Direct sum of groups given by rank and invariant factors.
DegreeCohomology direct_sum(const std::vector<DegreeCohomology>& parts);

}  // namespace hh
