#include "hh/group.hpp"

#include <algorithm>
#include <set>

#include "hh/error.hpp"

namespace hh {

FiniteGroupData FiniteGroupData::from_table(std::vector<std::string> labels, std::vector<std::vector<int>> table) {
  const int n = int(labels.size());
  if (n == 0) throw Error(ErrorKind::ValidationError, "group has no elements");
  if (int(table.size()) != n) throw Error(ErrorKind::ValidationError, "table has wrong number of rows");
  for (auto& r : table) {
    if (int(r.size()) != n) throw Error(ErrorKind::ValidationError, "table row of wrong length");
    for (int x : r)
      if (x < 0 || x >= n) throw Error(ErrorKind::ValidationError, "table entry out of range (closure)");
  }
  FiniteGroupData g;
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = -1;
  for (int e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw Error(ErrorKind::ValidationError, "no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
          throw Error(ErrorKind::ValidationError, "not associative at (" + g.labels_[a] + "," + g.labels_[b] + "," +
                                                      g.labels_[c] + ")");
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.table_[a][b] == g.identity_ && g.table_[b][a] == g.identity_) g.inverse_[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse_[a] < 0) throw Error(ErrorKind::ValidationError, "element " + g.labels_[a] + " has no inverse");
  g.class_of_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (g.class_of_[a] >= 0) continue;
    std::set<int> cls;
    for (int k = 0; k < n; ++k) cls.insert(g.conj(k, a));
    int id = int(g.classes_.size());
    g.classes_.push_back(std::vector<int>(cls.begin(), cls.end()));
    g.reps_.push_back(*cls.begin());
    for (int x : cls) g.class_of_[x] = id;
  }
  return g;
}

bool FiniteGroupData::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroupData::centralizer(int g) const {
  std::vector<int> c;
  for (int k = 0; k < int(order()); ++k)
    if (mul(k, g) == mul(g, k)) c.push_back(k);
  return c;
}

int FiniteGroupData::element_order(int g) const {
  int k = 1, x = g;
  while (x != identity_) x = mul(x, g), ++k;
  return k;
}

bool FiniteGroupData::is_subgroup(const std::vector<int>& h) const {
  if (h.empty()) return false;
  std::set<int> s(h.begin(), h.end());
  if (s.size() != h.size()) return false;
  for (int x : h)
    if (x < 0 || x >= int(order())) return false;
  if (!s.count(identity_)) return false;
  for (int a : h) {
    if (!s.count(inv(a))) return false;
    for (int b : h)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

std::vector<int> FiniteGroupData::generated_by(const std::vector<int>& gens) const {
  std::set<int> s{identity_};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int g : gens)
        if (s.insert(mul(a, g)).second) grew = true;
  }
  return std::vector<int>(s.begin(), s.end());
}

FiniteGroupData cyclic_group(int n) {
  std::vector<std::string> l;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    l.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return FiniteGroupData::from_table(l, t);
}

FiniteGroupData symmetric_group3() {
  // one-line notation images of (1,2,3)
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::string> labels = {"e", "(12)", "(23)", "(13)", "(123)", "(132)"};
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      t[a][b] = int(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroupData::from_table(labels, t);
}

AlgebraAction trivial_action(const FiniteGroupData& g, const FiniteDgAlgebra& a) {
  AlgebraAction act;
  act.group = g;
  act.sigma.assign(g.order(), ExactMatrix::identity(a.dim(), a.ring));
  return act;
}

AlgebraAction cyclic_action(const FiniteGroupData& g, const FiniteDgAlgebra& a, const ExactMatrix& m) {
  AlgebraAction act;
  act.group = g;
  act.sigma.assign(g.order(), ExactMatrix::identity(a.dim(), a.ring));
  // element i of cyclic_group is g^i
  for (std::size_t i = 1; i < g.order(); ++i) act.sigma[i] = m * act.sigma[i - 1];
  return act;
}

ValidationReport validate_action(const FiniteDgAlgebra& a, const AlgebraAction& act) {
  const auto& G = act.group;
  const std::size_t n = a.dim();
  if (act.sigma.size() != G.order()) return ValidationReport::fail("homomorphism", "", "one matrix per group element");
  for (std::size_t g = 0; g < G.order(); ++g)
    if (act.sigma[g].rows() != n || act.sigma[g].cols() != n)
      return ValidationReport::fail("shape", G.labels()[g], "matrix shape does not match the algebra");
  if (act.sigma[G.identity()] != ExactMatrix::identity(n, a.ring))
    return ValidationReport::fail("homomorphism", G.labels()[G.identity()], "sigma(e) != id");
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      if (act.sigma[G.mul(int(g), int(h))] != act.sigma[g] * act.sigma[h])
        return ValidationReport::fail("homomorphism", G.labels()[g] + "," + G.labels()[h], "sigma(gh) != sigma(g)sigma(h)");
  auto D = a.diff_matrix();
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& s = act.sigma[g];
    const auto st = s.transpose();
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [i, x] : st.row(j))
        if (a.deg(i) != a.deg(j))
          return ValidationReport::fail("degree", G.labels()[g] + "," + a.basis[j].label, "sigma(g) does not preserve degree");
    if (s * D != D * s) return ValidationReport::fail("commutes with d", G.labels()[g]);
    if (s.apply(a.unit_vec()) != a.unit_vec()) return ValidationReport::fail("unit", G.labels()[g], "g(1) != 1");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec lhs = s.apply(a.mul(a.basis_vec(i), a.basis_vec(j)));
        Vec rhs = a.mul(s.apply(a.basis_vec(i)), s.apply(a.basis_vec(j)));
        if (lhs != rhs)
          return ValidationReport::fail("multiplicative", G.labels()[g] + "," + a.basis[i].label + "," + a.basis[j].label);
      }
  }
  return {};
}

}  // namespace hh
