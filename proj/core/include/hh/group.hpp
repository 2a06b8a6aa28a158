#pragma once
#include <string>
#include <vector>

#include "hh/algebra.hpp"

namespace hh {

class FiniteGroupData {
 public:
  FiniteGroupData() = default;
  // Validates the table (closure, associativity, identity, inverses) and
  // derives conjugacy data. Throws ValidationError.
  static FiniteGroupData from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  std::size_t order() const { return labels_.size(); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int identity() const { return identity_; }
  int conj(int k, int h) const { return mul(mul(k, h), inv(k)); }  // k h k^-1
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  bool is_abelian() const;

  // classes ordered by least element; representative = least index
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  const std::vector<int>& representatives() const { return reps_; }
  int class_of(int g) const { return class_of_[g]; }
  std::vector<int> centralizer(int g) const;
  int element_order(int g) const;

  bool is_subgroup(const std::vector<int>& h) const;
  std::vector<int> generated_by(const std::vector<int>& gens) const;

  bool operator==(const FiniteGroupData& o) const { return labels_ == o.labels_ && table_ == o.table_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> reps_;
  std::vector<int> class_of_;
};

FiniteGroupData cyclic_group(int n);     // elements e, g, g^2, ...
FiniteGroupData symmetric_group3();      // permutations of {1,2,3}

// Degree-preserving automorphisms sigma(g); column j of sigma(g) is g(e_j).
struct AlgebraAction {
  FiniteGroupData group;
  std::vector<ExactMatrix> sigma;

  Vec apply(int g, const Vec& v) const { return sigma[g].apply(v); }
};

AlgebraAction trivial_action(const FiniteGroupData& g, const FiniteDgAlgebra& a);
// Action generated by sending the generator of a cyclic group to m.
AlgebraAction cyclic_action(const FiniteGroupData& g, const FiniteDgAlgebra& a, const ExactMatrix& m);
ValidationReport validate_action(const FiniteDgAlgebra& a, const AlgebraAction& act);

}  // namespace hh
