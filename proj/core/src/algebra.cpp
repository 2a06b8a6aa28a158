#include "hh/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hh/error.hpp"

namespace hh {

LinComb normalize(LinComb c, const Ring& r) {
  std::sort(c.begin(), c.end(), [](auto& x, auto& y) { return x.first < y.first; });
  LinComb out;
  for (std::size_t k = 0; k < c.size();) {
    std::size_t j = k;
    Rat s = 0;
    while (j < c.size() && c[j].first == c[k].first) s += c[j++].second;
    s = r.reduce(s);
    if (s != 0) out.push_back({c[k].first, s});
    k = j;
  }
  return out;
}

Vec to_dense(const LinComb& c, std::size_t n) {
  Vec v(n, Rat(0));
  for (auto& [i, x] : c) v[i] += x;
  return v;
}

LinComb to_sparse(const Vec& v) {
  LinComb c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) c.push_back({std::uint32_t(i), v[i]});
  return c;
}

std::string ValidationReport::message() const {
  if (ok) return "pass";
  std::string s = "fail: " + axiom + " on (" + witness + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

ValidationReport ValidationReport::fail(std::string axiom, std::string witness, std::string detail) {
  ValidationReport r;
  r.ok = false;
  r.axiom = std::move(axiom);
  r.witness = std::move(witness);
  r.detail = std::move(detail);
  return r;
}

void FiniteDgAlgebra::init_tables() {
  mult.assign(dim(), std::vector<LinComb>(dim()));
  diff.assign(dim(), LinComb{});
}

Vec FiniteDgAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      Rat c = a[i] * b[j];
      for (auto& [k, x] : mult[i][j]) out[k] += c * x;
    }
  }
  for (auto& x : out) x = ring.reduce(x);
  return out;
}

Vec FiniteDgAlgebra::d(const Vec& a) const {
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i)
    if (a[i] != 0)
      for (auto& [k, x] : diff[i]) out[k] += a[i] * x;
  for (auto& x : out) x = ring.reduce(x);
  return out;
}

Vec FiniteDgAlgebra::unit_vec() const { return basis_vec(unit); }

Vec FiniteDgAlgebra::basis_vec(std::size_t i) const {
  Vec v(dim(), Rat(0));
  v[i] = 1;
  return v;
}

ExactMatrix FiniteDgAlgebra::diff_matrix() const {
  MatrixBuilder b(dim(), dim(), ring);
  for (std::size_t i = 0; i < dim(); ++i)
    for (auto& [k, x] : diff[i]) b.add(k, i, x);
  return b.build();
}

int FiniteDgAlgebra::max_degree() const {
  int m = 0;
  bool any = false;
  for (auto& b : basis) m = any ? std::max(m, b.degree) : b.degree, any = true;
  return m;
}

int FiniteDgAlgebra::min_degree() const {
  int m = 0;
  bool any = false;
  for (auto& b : basis) m = any ? std::min(m, b.degree) : b.degree, any = true;
  return m;
}

std::optional<std::size_t> FiniteDgAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (basis[i].label == label) return i;
  return std::nullopt;
}

bool FiniteDgAlgebra::operator==(const FiniteDgAlgebra& o) const {
  return ring == o.ring && basis == o.basis && unit == o.unit && mult == o.mult && diff == o.diff &&
         augmentation == o.augmentation;
}

FiniteDgAlgebra lexicographic_order(const FiniteDgAlgebra& a) {
  std::vector<std::size_t> perm(a.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](auto x, auto y) { return a.basis[x].label < a.basis[y].label; });
  std::vector<std::uint32_t> where(a.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = std::uint32_t(i);
  auto remap = [&](const LinComb& c) {
    LinComb o;
    for (auto& [k, x] : c) o.push_back({where[k], x});
    return normalize(o, a.ring);
  };
  FiniteDgAlgebra b;
  b.ring = a.ring;
  for (auto p : perm) b.basis.push_back(a.basis[p]);
  b.unit = where[a.unit];
  b.init_tables();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    b.diff[where[i]] = remap(a.diff[i]);
    for (std::size_t j = 0; j < a.dim(); ++j) b.mult[where[i]][where[j]] = remap(a.mult[i][j]);
  }
  if (a.augmentation) {
    Vec v(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) v[where[i]] = (*a.augmentation)[i];
    b.augmentation = v;
  }
  return b;
}

namespace {

std::string lab(const FiniteDgAlgebra& a, std::size_t i) { return a.basis[i].label; }

}  // namespace

ValidationReport validate_algebra(const FiniteDgAlgebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return ValidationReport::fail("basis", "", "empty basis");
  if (a.unit >= n) return ValidationReport::fail("unit", "", "unit index out of range");
  if (a.mult.size() != n || a.diff.size() != n) return ValidationReport::fail("tables", "", "table sizes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.basis[i].label == a.basis[j].label) return ValidationReport::fail("labels", lab(a, i), "duplicate label");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [k, x] : a.mult[i][j]) {
        if (k >= n) return ValidationReport::fail("index", lab(a, i) + "," + lab(a, j), "product index out of range");
        if (a.deg(k) != a.deg(i) + a.deg(j))
          return ValidationReport::fail("degree", lab(a, i) + "," + lab(a, j),
                                        "product has a component on " + lab(a, k) + " of degree " +
                                            std::to_string(a.deg(k)));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (auto& [k, x] : a.diff[i]) {
      if (k >= n) return ValidationReport::fail("index", lab(a, i), "differential index out of range");
      if (a.deg(k) != a.deg(i) + 1)
        return ValidationReport::fail("differential degree", lab(a, i), "d has a component on " + lab(a, k));
    }
  for (std::size_t i = 0; i < n; ++i) {
    Vec dd = a.d(a.d(a.basis_vec(i)));
    if (!is_zero(dd)) return ValidationReport::fail("d^2 = 0", lab(a, i));
  }
  if (a.deg(a.unit) != 0) return ValidationReport::fail("unit", lab(a, a.unit), "unit not in degree 0");
  if (!a.diff[a.unit].empty()) return ValidationReport::fail("unit", lab(a, a.unit), "d(1) != 0");
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = a.basis_vec(i);
    if (a.mul(a.unit_vec(), e) != e || a.mul(e, a.unit_vec()) != e)
      return ValidationReport::fail("unit", lab(a, i), "unit is not a two-sided identity");
  }
  // sparse products of combinations through the tables
  auto times = [&](const LinComb& x, const LinComb& y) {
    LinComb acc;
    for (auto& [i, c] : x)
      for (auto& [j, e] : y)
        for (auto& [k, f] : a.mult[i][j]) acc.push_back({k, c * e * f});
    return normalize(std::move(acc), a.ring);
  };
  auto plus = [&](LinComb x, const LinComb& y, int s) {
    for (auto& [k, c] : y) x.push_back({k, s * c});
    return normalize(std::move(x), a.ring);
  };
  auto dl = [&](const LinComb& x) {
    LinComb acc;
    for (auto& [i, c] : x)
      for (auto& [k, f] : a.diff[i]) acc.push_back({k, c * f});
    return normalize(std::move(acc), a.ring);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LinComb x{{std::uint32_t(i), Rat(1)}}, y{{std::uint32_t(j), Rat(1)}};
      LinComb lhs = dl(a.mult[i][j]);
      LinComb rhs = plus(times(a.diff[i], y), times(x, a.diff[j]), sgn(a.deg(i)));
      if (lhs != rhs) return ValidationReport::fail("leibniz", lab(a, i) + "," + lab(a, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const LinComb& ij = a.mult[i][j];
      LinComb x{{std::uint32_t(i), Rat(1)}};
      for (std::size_t k = 0; k < n; ++k) {
        const LinComb& jk = a.mult[j][k];
        if (ij.empty() && jk.empty()) continue;
        LinComb z{{std::uint32_t(k), Rat(1)}};
        if (times(ij, z) != times(x, jk))
          return ValidationReport::fail("associativity", lab(a, i) + "," + lab(a, j) + "," + lab(a, k));
      }
    }
  if (a.augmentation) {
    auto& eps = *a.augmentation;
    if (eps.size() != n) return ValidationReport::fail("augmentation", "", "length");
    for (std::size_t i = 0; i < n; ++i)
      if (eps[i] != 0 && a.deg(i) != 0) return ValidationReport::fail("augmentation", lab(a, i), "not degree 0");
    if (eps[a.unit] != 1) return ValidationReport::fail("augmentation", lab(a, a.unit), "eps(1) != 1");
    auto ev = [&](const Vec& v) {
      Rat s = 0;
      for (std::size_t k = 0; k < n; ++k) s += v[k] * eps[k];
      return a.ring.reduce(s);
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (ev(a.mul(a.basis_vec(i), a.basis_vec(j))) != a.ring.reduce(eps[i] * eps[j]))
          return ValidationReport::fail("augmentation", lab(a, i) + "," + lab(a, j), "not multiplicative");
  }
  return {};
}

FiniteDgAlgebra split_unit(const FiniteDgAlgebra& a, const Vec& u, const std::string& label) {
  std::size_t n = a.dim();
  std::size_t k = n;
  for (std::size_t i = 0; i < n; ++i)
    if (u[i] != 0 && a.ring.is_unit(u[i]) && a.deg(i) == 0) {
      k = i;
      break;
    }
  if (k == n) throw Error(ErrorKind::UnitNotSplit, "no basis coordinate of the unit is invertible");
  // new basis f_k = u, f_i = e_i otherwise; e_k = (u - sum_{i != k} u_i e_i) / u_k
  Rat ik = a.ring.inv(u[k]);
  auto to_new = [&](const Vec& v) {
    Vec w = v;
    Rat ck = a.ring.reduce(v[k] * ik);
    for (std::size_t i = 0; i < n; ++i)
      if (i != k) w[i] = a.ring.reduce(v[i] - ck * u[i]);
    w[k] = ck;
    return w;
  };
  auto to_old = [&](std::size_t i) {
    if (i == k) return u;
    return a.basis_vec(i);
  };
  FiniteDgAlgebra b;
  b.ring = a.ring;
  b.basis = a.basis;
  b.basis[k] = {label, 0};
  b.unit = k;
  b.init_tables();
  for (std::size_t i = 0; i < n; ++i) {
    b.diff[i] = to_sparse(to_new(a.d(to_old(i))));
    for (std::size_t j = 0; j < n; ++j) b.mult[i][j] = to_sparse(to_new(a.mul(to_old(i), to_old(j))));
  }
  if (a.augmentation) {
    Vec e(n);
    for (std::size_t i = 0; i < n; ++i) {
      Vec o = to_old(i);
      Rat s = 0;
      for (std::size_t j = 0; j < n; ++j) s += o[j] * (*a.augmentation)[j];
      e[i] = a.ring.reduce(s);
    }
    b.augmentation = e;
  }
  return b;
}

ReducedPart reduced_part(const FiniteDgAlgebra& a) {
  Vec one = a.unit_vec();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec e = a.basis_vec(i);
    if (a.mul(one, e) != e || a.mul(e, one) != e)
      throw Error(ErrorKind::UnitNotSplit, "basis element '" + a.basis[a.unit].label + "' is not the unit");
  }
  ReducedPart r;
  r.pos.assign(a.dim(), -1);
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (i != a.unit) {
      r.pos[i] = long(r.index.size());
      r.index.push_back(i);
      r.degree.push_back(a.deg(i));
    }
  for (auto i : r.index) {
    LinComb c;
    for (auto& [k, x] : a.diff[i])
      if (k != a.unit) c.push_back({std::uint32_t(r.pos[k]), x});
    r.diff.push_back(c);
  }
  return r;
}

FiniteDgAlgebra opposite(const FiniteDgAlgebra& a) {
  FiniteDgAlgebra b = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      LinComb c = a.mult[j][i];
      if (sgn(long(a.deg(i)) * a.deg(j)) < 0)
        for (auto& [k, x] : c) x = -x;
      b.mult[i][j] = normalize(c, a.ring);
    }
  return b;
}

FiniteDgAlgebra tensor(const FiniteDgAlgebra& a, const FiniteDgAlgebra& b) {
  if (a.ring != b.ring) throw Error(ErrorKind::ShapeMismatch, "tensor of algebras over different rings");
  FiniteDgAlgebra t;
  t.ring = a.ring;
  const std::size_t m = b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < m; ++j) t.basis.push_back({a.basis[i].label + "⊗" + b.basis[j].label, a.deg(i) + b.deg(j)});
  t.unit = a.unit * m + b.unit;
  t.init_tables();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t i2 = 0; i2 < m; ++i2) {
      LinComb dc;
      for (auto& [k, x] : a.diff[i]) dc.push_back({std::uint32_t(k * m + i2), x});
      for (auto& [k, x] : b.diff[i2]) dc.push_back({std::uint32_t(i * m + k), sgn(a.deg(i)) * x});
      t.set_diff(i * m + i2, dc);
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          // (a⊗a')(b⊗b') = (-1)^{|a'||b|} ab ⊗ a'b'
          int s = sgn(long(b.deg(i2)) * a.deg(j));
          LinComb c;
          for (auto& [k, x] : a.mult[i][j])
            for (auto& [k2, y] : b.mult[i2][j2]) c.push_back({std::uint32_t(k * m + k2), s * x * y});
          t.set_product(i * m + i2, j * m + j2, c);
        }
    }
  return t;
}

FiniteDgAlgebra enveloping(const FiniteDgAlgebra& a) { return tensor(a, opposite(a)); }

int DgBimodule::max_degree() const {
  int m = 0;
  bool any = false;
  for (auto& b : basis) m = any ? std::max(m, b.degree) : b.degree, any = true;
  return m;
}

int DgBimodule::min_degree() const {
  int m = 0;
  bool any = false;
  for (auto& b : basis) m = any ? std::min(m, b.degree) : b.degree, any = true;
  return m;
}

Vec DgBimodule::d(const Vec& m) const {
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < dim(); ++i)
    if (m[i] != 0)
      for (auto& [k, x] : diff[i]) out[k] += m[i] * x;
  for (auto& x : out) x = ring.reduce(x);
  return out;
}

Vec DgBimodule::act_left(const Vec& a, const Vec& m) const {
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (m[j] != 0)
        for (auto& [k, x] : left[i][j]) out[k] += a[i] * m[j] * x;
  }
  for (auto& x : out) x = ring.reduce(x);
  return out;
}

Vec DgBimodule::act_right(const Vec& m, const Vec& a) const {
  Vec out(dim(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (m[j] != 0)
        for (auto& [k, x] : right[i][j]) out[k] += a[i] * m[j] * x;
  }
  for (auto& x : out) x = ring.reduce(x);
  return out;
}

DgBimodule regular_bimodule(const FiniteDgAlgebra& a) {
  DgBimodule m;
  m.ring = a.ring;
  m.basis = a.basis;
  m.diff = a.diff;
  m.left.assign(a.dim(), std::vector<LinComb>(a.dim()));
  m.right = m.left;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      m.left[i][j] = a.mult[i][j];
      m.right[i][j] = a.mult[j][i];
    }
  return m;
}

DgBimodule dual_bimodule(const FiniteDgAlgebra& a, const DgBimodule& M) {
  DgBimodule v;
  v.ring = M.ring;
  const std::size_t n = M.dim();
  for (auto& b : M.basis) v.basis.push_back({b.label + "*", -b.degree});
  // (df)(m) = -(-1)^{|f|} f(dm): coefficient of m_k* in d(m_i*) is -(-1)^{|f|} [d m_k]_i
  v.diff.assign(n, LinComb{});
  for (std::size_t k = 0; k < n; ++k)
    for (auto& [i, x] : M.diff[k]) v.diff[i].push_back({std::uint32_t(k), -sgn(-M.deg(i)) * x});
  for (auto& c : v.diff) c = normalize(c, v.ring);
  v.left.assign(a.dim(), std::vector<LinComb>(n));
  v.right = v.left;
  for (std::size_t ai = 0; ai < a.dim(); ++ai)
    for (std::size_t m = 0; m < n; ++m) {
      // (a.f)(m) = (-1)^{|a|(|f|+|m|)} f(m a) ; (f.a)(m) = f(a m)
      for (auto& [k, x] : M.right[ai][m])  // m.a = sum x m_k
      {
        long e = long(a.deg(ai)) * (-M.deg(k) + M.deg(m));
        v.left[ai][k].push_back({std::uint32_t(m), sgn(e) * x});
      }
      for (auto& [k, x] : M.left[ai][m]) v.right[ai][k].push_back({std::uint32_t(m), x});
    }
  for (auto& row : v.left)
    for (auto& c : row) c = normalize(c, v.ring);
  for (auto& row : v.right)
    for (auto& c : row) c = normalize(c, v.ring);
  return v;
}

ValidationReport validate_bimodule(const FiniteDgAlgebra& a, const DgBimodule& M) {
  const std::size_t n = M.dim(), na = a.dim();
  auto L = [&](std::size_t i) { return a.basis[i].label; };
  auto ML = [&](std::size_t j) { return M.basis[j].label; };
  for (std::size_t j = 0; j < n; ++j) {
    Vec m(n, Rat(0));
    m[j] = 1;
    if (!is_zero(M.d(M.d(m)))) return ValidationReport::fail("d^2 = 0", ML(j));
    for (auto& [k, x] : M.diff[j])
      if (M.deg(k) != M.deg(j) + 1) return ValidationReport::fail("differential degree", ML(j));
    if (M.act_left(a.unit_vec(), m) != m || M.act_right(m, a.unit_vec()) != m)
      return ValidationReport::fail("unit", ML(j), "unit does not act as identity");
    for (std::size_t i = 0; i < na; ++i) {
      Vec e = a.basis_vec(i);
      Vec am = M.act_left(e, m), ma = M.act_right(m, e);
      for (std::size_t k = 0; k < n; ++k) {
        if (am[k] != 0 && M.deg(k) != a.deg(i) + M.deg(j)) return ValidationReport::fail("degree", L(i) + "," + ML(j));
        if (ma[k] != 0 && M.deg(k) != a.deg(i) + M.deg(j)) return ValidationReport::fail("degree", ML(j) + "," + L(i));
      }
      Vec l1 = M.d(am), r1 = M.act_left(a.d(e), m), r2 = M.act_left(e, M.d(m));
      for (std::size_t k = 0; k < n; ++k) r1[k] = M.ring.reduce(r1[k] + sgn(a.deg(i)) * r2[k]);
      if (l1 != r1) return ValidationReport::fail("left leibniz", L(i) + "," + ML(j));
      Vec l2 = M.d(ma), s1 = M.act_right(M.d(m), e), s2 = M.act_right(m, a.d(e));
      for (std::size_t k = 0; k < n; ++k) s1[k] = M.ring.reduce(s1[k] + sgn(M.deg(j)) * s2[k]);
      if (l2 != s1) return ValidationReport::fail("right leibniz", ML(j) + "," + L(i));
      for (std::size_t i2 = 0; i2 < na; ++i2) {
        Vec f = a.basis_vec(i2);
        if (M.act_left(a.mul(e, f), m) != M.act_left(e, M.act_left(f, m)))
          return ValidationReport::fail("left associativity", L(i) + "," + L(i2) + "," + ML(j));
        if (M.act_right(m, a.mul(e, f)) != M.act_right(M.act_right(m, e), f))
          return ValidationReport::fail("right associativity", ML(j) + "," + L(i) + "," + L(i2));
        if (M.act_right(M.act_left(e, m), f) != M.act_left(e, M.act_right(m, f)))
          return ValidationReport::fail("actions commute", L(i) + "," + ML(j) + "," + L(i2));
      }
    }
  }
  return {};
}

FiniteDgAlgebra ground_algebra(Ring r) {
  FiniteDgAlgebra a;
  a.ring = r;
  a.basis = {{"1", 0}};
  a.unit = 0;
  a.init_tables();
  a.mult[0][0] = {{0, Rat(1)}};
  a.augmentation = Vec{Rat(1)};
  return a;
}

FiniteDgAlgebra truncated_polynomial(Ring r, int deg_x, int n) {
  FiniteDgAlgebra a;
  a.ring = r;
  for (int i = 0; i < n; ++i) {
    std::string l = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    a.basis.push_back({l, i * deg_x});
  }
  a.unit = 0;
  a.init_tables();
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n; ++j) {
      a.mult[i][j] = {{std::uint32_t(i + j), Rat(1)}};
    }
  Vec eps(n, Rat(0));
  eps[0] = 1;
  a.augmentation = eps;
  return lexicographic_order(a);
}

FiniteDgAlgebra exterior_algebra(Ring r, int deg_x) { return truncated_polynomial(r, deg_x, 2); }

}  // namespace hh
