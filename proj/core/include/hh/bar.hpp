#pragma once
#include <map>
#include <unordered_map>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/complex.hpp"

namespace hh {

using Word = std::vector<std::uint16_t>;

// Shifted degree of the first j letters: sum_{i<j} (|w_i| - 1).
// Every bar sign in the engine is written in terms of this helper.
long eps(const std::vector<int>& letter_degree, const std::uint16_t* w, int j);

// All words over A-bar of length <= max_len whose shifted degree lies in
// [emin, emax]; prefixes that cannot reach the range are pruned.
class WordTable {
 public:
  WordTable() = default;
  WordTable(std::vector<int> letter_degree, int max_len, long emin, long emax, std::size_t cap = 4000000);

  std::size_t size() const { return len_.size(); }
  int length(std::uint32_t w) const { return len_[w]; }
  long degree(std::uint32_t w) const { return deg_[w]; }
  const std::uint16_t* letters(std::uint32_t w) const { return flat_.data() + off_[w]; }
  Word word(std::uint32_t w) const { return Word(letters(w), letters(w) + length(w)); }
  long find(const std::uint16_t* l, int len) const;
  long find(const Word& w) const { return find(w.data(), int(w.size())); }
  int max_len() const { return N_; }
  const std::vector<int>& letter_degree() const { return ldeg_; }

 private:
  std::uint64_t code(const std::uint16_t* l, int len) const;
  std::vector<int> ldeg_;
  int N_ = 0;
  std::uint64_t base_ = 1;
  std::vector<std::uint16_t> flat_;
  std::vector<std::uint32_t> off_;
  std::vector<std::uint8_t> len_;
  std::vector<long> deg_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

// Truncated Hochschild cochains Hom(A-bar[1]^{⊗k}, M), k <= N, or chains
// M ⊗ A-bar[1]^{⊗k}, with total degrees in [lo, hi].
//   cochain degree = |target| - sum(|a_i| - 1),  d raises degree
//   chain degree   = |m| + sum(|a_i| - 1),        b raises degree (upper grading)
class HochschildSpace {
 public:
  enum class Kind { Cochains, Chains };

  HochschildSpace(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi, Kind kind = Kind::Cochains);

  Kind kind() const { return kind_; }
  int N() const { return N_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t dim(int n) const;
  // basis element: (word id, module basis index)
  std::pair<std::uint32_t, std::uint32_t> elem(int n, std::size_t i) const { return basis_[n - lo_][i]; }
  long index(int n, std::uint32_t w, std::uint32_t t) const;
  long index_word(int n, const Word& w, std::uint32_t t) const;
  int degree_of(std::uint32_t w, std::uint32_t t) const;

  ExactMatrix differential(int n) const;  // degree n -> n+1, requires lo <= n < hi
  CochainComplex complex() const;

  const WordTable& words() const { return words_; }
  const ReducedPart& abar() const { return abar_; }
  const FiniteDgAlgebra& algebra() const { return A_; }
  const DgBimodule& module() const { return M_; }
  const std::vector<int>& letter_degree() const { return ldeg_; }

 private:
  void column_cochain(int n, std::size_t col, MatrixBuilder& b) const;
  void column_chain(int n, std::size_t col, MatrixBuilder& b) const;

  FiniteDgAlgebra A_;
  DgBimodule M_;
  ReducedPart abar_;
  Kind kind_;
  int N_, lo_, hi_;
  std::vector<int> ldeg_;  // unshifted degree of each A-bar letter
  WordTable words_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> basis_;
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index_;
  // structure of A-bar
  std::vector<LinComb> dbar_, dbarT_;  // d on A-bar and its transpose
  std::vector<std::vector<LinComb>> mubar_;  // projected products
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Rat>>> mubarT_;
};

// Whether degree m of the untruncated space receives no words longer than N.
bool degree_complete(const HochschildSpace& s, int m);

struct HHResult {
  int N = 0;
  HochschildSpace::Kind kind = HochschildSpace::Kind::Cochains;
  std::vector<DegreeCohomology> degrees;  // requested window only
  const DegreeCohomology* at(int n) const;
};

// Cohomology of the truncated complex in degrees [lo, hi] with a per-degree
// certificate: proved (no longer words can reach the degree), certified
// (identical at N-1) or unstable.
HHResult hochschild_cohomology(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi,
                               bool representatives = false);
HHResult hochschild_homology(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi);

// ---- explicit cochains -------------------------------------------------

struct HochschildCochain {
  int degree = 0;
  std::map<Word, Vec> values;  // word -> value in M

  void add(const Word& w, const Vec& v, const Ring& r);
  bool operator==(const HochschildCochain& o) const;
  int max_length() const;
};

HochschildCochain cochain_from_vector(const HochschildSpace& s, int n, const Vec& v);
Vec cochain_to_vector(const HochschildSpace& s, int n, const HochschildCochain& f);

// The transported differential on an untruncated cochain.
HochschildCochain cochain_differential(const FiniteDgAlgebra& A, const DgBimodule& M, const HochschildCochain& f);

// (phi.psi)(a_1..a_{k+l}) = (-1)^{|psi| eps_k} phi(a_1..a_k) psi(a_{k+1}..a_{k+l}), values multiplied in A
HochschildCochain cup_product(const FiniteDgAlgebra& A, const HochschildCochain& phi, const HochschildCochain& psi);
// the same with values in an algebra R under A (e.g. A#G)
HochschildCochain cup_product(const FiniteDgAlgebra& A, const FiniteDgAlgebra& R, const HochschildCochain& phi,
                              const HochschildCochain& psi);
HochschildCochain unit_cochain(const FiniteDgAlgebra& A);  // the augmentation class: empty word -> 1

// Elements of the reduced bar B(A) = A ⊗ A-bar[1]^{⊗k} ⊗ A
struct BarTerm {
  std::uint32_t a0;
  Word w;
  std::uint32_t a1;
  bool operator<(const BarTerm& o) const { return std::tie(a0, w, a1) < std::tie(o.a0, o.w, o.a1); }
  bool operator==(const BarTerm& o) const { return a0 == o.a0 && w == o.w && a1 == o.a1; }
};
using BarElem = std::map<BarTerm, Rat>;

// A^e-linear endomorphism of B(A), stored by its values on (1|w|1)
struct EndoCochain {
  int degree = 0;
  std::map<Word, BarElem> values;
  bool operator==(const EndoCochain& o) const { return degree == o.degree && values == o.values; }
};

BarElem bar_differential(const FiniteDgAlgebra& A, const BarElem& x);
EndoCochain lift_tilde(const FiniteDgAlgebra& A, const HochschildCochain& phi, int max_len);
EndoCochain lift_hat(const FiniteDgAlgebra& A, const HochschildCochain& phi, int max_len);
HochschildCochain eps_star(const FiniteDgAlgebra& A, const EndoCochain& F);
// composition F∘G, evaluated on words of length <= max_len
EndoCochain compose(const FiniteDgAlgebra& A, const EndoCochain& F, const EndoCochain& G, int max_len);
// (dF)(w) = D(F(w)) - (-1)^{|F|} F(D(1|w|1)) on words of length <= max_len
EndoCochain endo_differential(const FiniteDgAlgebra& A, const EndoCochain& F, int max_len);
EndoCochain truncate(const EndoCochain& F, int max_len);

// all words over A-bar up to length L
std::vector<Word> all_words(std::size_t letters, int max_len);

}  // namespace hh
