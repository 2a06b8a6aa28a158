#pragma once
#include <cstdint>
#include <vector>

#include "hh/matrix.hpp"

namespace hh {

struct SmithDecomposition {
  ExactMatrix U, D, V;  // U * M * V = D
  std::vector<Int> divisors;
  std::size_t rank = 0;
};

// Dense minimal-pivot Smith normal form with transforms, over Z.
SmithDecomposition smith_normal_form(const ExactMatrix& m);

// Nonzero invariant factors d1 | d2 | ... of an integer matrix. Sparse unit
// pivots first, dense Smith form on whatever is left.
std::vector<Int> elementary_divisors(const ExactMatrix& m);

// Rank over the matrix's own ring (Z rank = Q rank).
std::size_t rank(const ExactMatrix& m);

// Basis of the kernel (column vectors); over Z a saturated lattice basis.
std::vector<Vec> kernel_basis(const ExactMatrix& m);

// Integer determinant of a square matrix (Bareiss). Used for unimodularity checks.
Int determinant(const ExactMatrix& m);

// Coordinates of cohomology classes in degree n of a complex
//   C^{n-1} --d_in--> C^n --d_out--> C^{n+1}
// Either map may be null (treated as zero).
class ClassReducer {
 public:
  ClassReducer(const ExactMatrix* d_in, const ExactMatrix* d_out, std::size_t dim, Ring ring);

  std::size_t free_rank() const { return free_; }
  std::vector<Int> torsion() const;
  // generators: torsion ones first (order > 1), then free ones (order 0)
  const std::vector<Vec>& generators() const { return gens_; }
  const std::vector<Int>& orders() const { return orders_; }

  bool is_cocycle(const Vec& z) const;
  // Coordinates of [z] with respect to generators(); torsion coordinates reduced mod order.
  std::vector<Rat> coordinates(const Vec& z) const;
  bool is_coboundary(const Vec& z) const;

 private:
  struct Op {
    std::uint32_t i;
    Rat pivot;
    std::vector<std::pair<std::uint32_t, Rat>> rest;
  };
  void build(const ExactMatrix* d_in, const ExactMatrix* d_out);
  Vec to_reduced(const Vec& z) const;
  Vec from_reduced(const Vec& x) const;
  std::vector<Rat> reduced_coordinates(const Vec& z) const;

  Ring ring_;
  std::size_t full_dim_ = 0;
  // unit-pivot reduction of the complex around this degree
  std::vector<Op> in_ops_, out_ops_;
  std::vector<std::uint32_t> keep_;
  std::size_t dim_ = 0, free_ = 0;
  std::vector<Vec> gens_;
  std::vector<Int> orders_;
  ExactMatrix d_out_;
  bool has_out_ = false;
  // integer data
  std::vector<std::vector<Int>> U_;   // dim x dim
  std::size_t r_in_ = 0;
  std::vector<Int> div_in_;
  std::vector<std::vector<Int>> U2_;  // acts on rows r_in_.. of U z
  // field data
  struct Row {
    std::size_t pivot;
    Vec v, tag;
  };
  std::vector<Row> ech_;
};

}  // namespace hh
