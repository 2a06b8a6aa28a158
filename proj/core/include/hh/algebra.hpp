#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/matrix.hpp"

namespace hh {

struct BasisElement {
  std::string label;
  int degree = 0;
  bool operator==(const BasisElement& o) const { return label == o.label && degree == o.degree; }
};

// sparse combination of basis indices, sorted, no zeros
using LinComb = std::vector<std::pair<std::uint32_t, Rat>>;

LinComb normalize(LinComb c, const Ring& r);
Vec to_dense(const LinComb& c, std::size_t n);
LinComb to_sparse(const Vec& v);

struct ValidationReport {
  bool ok = true;
  std::string axiom;    // e.g. "degree", "leibniz"
  std::string witness;  // basis labels involved
  std::string detail;
  std::string message() const;
  static ValidationReport fail(std::string axiom, std::string witness, std::string detail = {});
};

class FiniteDgAlgebra {
 public:
  Ring ring;
  std::vector<BasisElement> basis;
  std::size_t unit = 0;
  std::vector<std::vector<LinComb>> mult;  // mult[i][j] = e_i e_j
  std::vector<LinComb> diff;               // diff[i] = d(e_i)
  std::optional<Vec> augmentation;

  std::size_t dim() const { return basis.size(); }
  int deg(std::size_t i) const { return basis[i].degree; }
  // resize tables to dim() with zero entries
  void init_tables();
  void set_product(std::size_t i, std::size_t j, LinComb c) { mult[i][j] = normalize(std::move(c), ring); }
  void set_diff(std::size_t i, LinComb c) { diff[i] = normalize(std::move(c), ring); }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec d(const Vec& a) const;
  Vec unit_vec() const;
  Vec basis_vec(std::size_t i) const;
  ExactMatrix diff_matrix() const;  // column i = d(e_i)
  int max_degree() const;
  int min_degree() const;
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool operator==(const FiniteDgAlgebra& o) const;
};

// Sort the basis lexicographically by label (unit and tables permuted along).
FiniteDgAlgebra lexicographic_order(const FiniteDgAlgebra& a);

ValidationReport validate_algebra(const FiniteDgAlgebra& a);

// Change basis so that the given unit vector becomes a basis element.
// Throws UnitNotSplit when no coordinate of u is a unit of the ring.
FiniteDgAlgebra split_unit(const FiniteDgAlgebra& a, const Vec& u, const std::string& label = "1");

// A-bar = A / (ring . 1): basis = the non-unit basis elements.
struct ReducedPart {
  std::vector<std::size_t> index;  // positions in A
  std::vector<int> degree;
  std::vector<LinComb> diff;       // induced differential, in A-bar coordinates
  std::vector<long> pos;           // pos[i] = A-bar index of A basis i, or -1 for the unit
  std::size_t dim() const { return index.size(); }
};
ReducedPart reduced_part(const FiniteDgAlgebra& a);

FiniteDgAlgebra opposite(const FiniteDgAlgebra& a);
FiniteDgAlgebra tensor(const FiniteDgAlgebra& a, const FiniteDgAlgebra& b);
FiniteDgAlgebra enveloping(const FiniteDgAlgebra& a);

// Bimodule over a dg-algebra: left[a][m] = a.m, right[a][m] = m.a
struct DgBimodule {
  Ring ring;
  std::vector<BasisElement> basis;
  std::vector<LinComb> diff;
  std::vector<std::vector<LinComb>> left, right;

  std::size_t dim() const { return basis.size(); }
  int deg(std::size_t i) const { return basis[i].degree; }
  int max_degree() const;
  int min_degree() const;
  Vec d(const Vec& m) const;
  Vec act_left(const Vec& a, const Vec& m) const;
  Vec act_right(const Vec& m, const Vec& a) const;
};

DgBimodule regular_bimodule(const FiniteDgAlgebra& a);
// M^v with (a.f)(m) = (-1)^{|a|(|f|+|m|)} f(m a), (f.a)(m) = f(a m), (df)(m) = -(-1)^{|f|} f(dm)
DgBimodule dual_bimodule(const FiniteDgAlgebra& a, const DgBimodule& m);
ValidationReport validate_bimodule(const FiniteDgAlgebra& a, const DgBimodule& m);

// Small named algebras used by fixtures and tests.
FiniteDgAlgebra ground_algebra(Ring r);                       // the ring itself in degree 0
FiniteDgAlgebra exterior_algebra(Ring r, int deg_x);          // R[x]/x^2
FiniteDgAlgebra truncated_polynomial(Ring r, int deg_x, int n);  // R[x]/x^n

}  // namespace hh
