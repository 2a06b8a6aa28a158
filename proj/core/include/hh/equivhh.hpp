#pragma once
#include <memory>
#include <optional>

#include "hh/bar.hpp"
#include "hh/groupcoh.hpp"
#include "hh/smash.hpp"

namespace hh {

// Coefficients M for Hom_{A^e}(B(A), M) together with matrices tau[k] on M
// (k in the subgroup) such that k.f = tau_k o f o sigma_k^-1 is a G-action.
struct EquivariantCoefficients {
  DgBimodule module;
  std::vector<int> subgroup;
  std::vector<ExactMatrix> tau;             // indexed by group element, empty outside the subgroup
  std::optional<FiniteDgAlgebra> values;    // algebra receiving cup products, if any
  std::optional<std::size_t> unit;          // basis index of the unit of `values`
};

// M = A#G with the conjugation action, over all of G
EquivariantCoefficients smash_coefficients(const SmashAlgebra& S);
// M = A_g with the action of the centralizer of g
EquivariantCoefficients twisted_coefficients(const FiniteDgAlgebra& A, const AlgebraAction& act, int g);

// Hom(B(A), M) truncated at bar length NA in degrees [lo, hi], as a complex with G-action.
GComplex hochschild_gcomplex(const FiniteDgAlgebra& A, const AlgebraAction& act, const EquivariantCoefficients& M,
                             int NA, int lo, int hi);

// Hom_{ZG}(B_G, Hom_{A^e}(B(A), M)) totalized over [lo, hi]:
//   inhomogeneous group cochains of length p <= NG with values in bar cochains of length <= NA.
class EquivariantDoubleComplex {
 public:
  EquivariantDoubleComplex(const FiniteDgAlgebra& A, const AlgebraAction& act, EquivariantCoefficients M, int NG,
                           int NA, int lo, int hi);

  int NG() const { return NG_; }
  int NA() const { return NA_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const HochschildSpace& inner() const { return *X_; }
  const GComplex& coefficients() const { return C_->coefficients(); }
  const GroupCochains& cochains() const { return *C_; }
  const EquivariantCoefficients& module() const { return M_; }

  std::size_t dim(int n) const { return C_->dim(n); }
  CochainComplex total() const { return C_->complex(); }
  ExactMatrix horizontal(int n) const;  // group direction
  ExactMatrix vertical(int n) const;    // bar direction, including the sign (-1)^p
  // both differentials square to zero and anticommute
  ValidationReport check() const;

  Vec product(int n, const Vec& a, int m, const Vec& b) const { return C_->product(n, a, m, b); }
  // the class of the augmentations in degree 0
  Vec unit() const;

 private:
  FiniteDgAlgebra A_;
  AlgebraAction act_;
  EquivariantCoefficients M_;
  int NG_, NA_, lo_, hi_;
  std::shared_ptr<HochschildSpace> X_;
  std::unique_ptr<GroupCochains> C_, H_;
};

struct EquivariantResult {
  int NG = 0, NA = 0;
  std::vector<DegreeCohomology> degrees;
  std::vector<ProductEntry> products;
  const DegreeCohomology* at(int n) const;
};

// Cohomology of the double complex in [lo, hi]. A degree is proved when neither
// truncation can reach it. It is certified when NG reaches past the truncated
// bar cochains and lowering NA by one gives the same group; unstable otherwise.
EquivariantResult equivariant_cohomology(const FiniteDgAlgebra& A, const AlgebraAction& act,
                                         const EquivariantCoefficients& M, int NG, int NA, int lo, int hi,
                                         bool products = false, bool representatives = false);

// HH*(A#G, A#G) through the double complex, with products on generators
EquivariantResult hh_smash(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi,
                           bool products = false, bool representatives = false);

struct ConjugacySummand {
  int representative;
  std::vector<int> centralizer;
  EquivariantResult result;
};
struct ConjugacySplit {
  std::vector<ConjugacySummand> summands;
  std::vector<DegreeCohomology> total;
};
// one summand Ext_{C_g}(Z, Hom(B(A), A_g)) per conjugacy class representative g
ConjugacySplit conjugacy_split(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi);

struct SpectralEntry {
  int p = 0, q = 0;
  DegreeCohomology group;
  bool available = true;  // false when the page is not computed (torsion coefficients over Z)
};
struct SpectralPages {
  int NG = 0, NA = 0;
  std::vector<SpectralEntry> e1, e2;  // p in [0, NG], q in [lo, hi]; column NG is an edge
  const SpectralEntry* e2_at(int p, int q) const;
};
// Filtration by group degree: E1 = group cochains with values in H(Hom(B(A), A#G)),
// E2 = group cohomology of H(Hom(B(A), A#G)) with the induced action.
SpectralPages spectral_pages(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi);

}  // namespace hh
