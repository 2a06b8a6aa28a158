#include "hh/groupcoh.hpp"

#include <algorithm>
#include <map>

#include "hh/error.hpp"

namespace hh {

// ---- homogeneous resolution ------------------------------------------------

GroupBarResolution group_bar_resolution(const FiniteGroupData& G, int N, bool normalized) {
  if (N < 0) throw Error(ErrorKind::WindowTooWide, "negative group truncation");
  GroupBarResolution r;
  r.group = G;
  r.N = N;
  r.normalized = normalized;
  const int n = int(G.order());
  std::vector<std::map<std::vector<int>, std::size_t>> index(N + 1);
  std::vector<std::vector<int>> level;
  for (int g = 0; g < n; ++g) level.push_back({g});
  for (int k = 0; k <= N; ++k) {
    for (auto& t : level) index[k].emplace(t, index[k].size());
    r.basis.push_back(level);
    std::vector<std::vector<int>> next;
    for (auto& t : level)
      for (int g = 0; g < n; ++g) {
        if (normalized && t.back() == g) continue;
        auto u = t;
        u.push_back(g);
        next.push_back(std::move(u));
      }
    level = std::move(next);
  }
  for (int k = 0; k < N; ++k) {
    MatrixBuilder b(r.basis[k].size(), r.basis[k + 1].size(), Ring::Z());
    for (std::size_t c = 0; c < r.basis[k + 1].size(); ++c) {
      const auto& t = r.basis[k + 1][c];
      for (std::size_t j = 0; j < t.size(); ++j) {
        std::vector<int> u;
        for (std::size_t i = 0; i < t.size(); ++i)
          if (i != j) u.push_back(t[i]);
        auto it = index[k].find(u);
        if (it == index[k].end()) continue;  // degenerate face
        b.add(it->second, c, Rat(sgn(long(j))));
      }
    }
    r.boundary.push_back(b.build());
  }
  MatrixBuilder a(1, r.basis[0].size(), Ring::Z());
  for (std::size_t c = 0; c < r.basis[0].size(); ++c) a.add(0, c, Rat(1));
  r.augmentation = a.build();
  return r;
}

std::optional<int> resolution_defect(const GroupBarResolution& r) {
  // C^{-k-1} = B_k, C^0 = Z
  CochainComplex c;
  c.ring = Ring::Z();
  c.lo = -r.N - 1;
  for (int k = r.N; k >= 0; --k) c.dims.push_back(r.basis[k].size());
  c.dims.push_back(1);
  for (int k = r.N - 1; k >= 0; --k) c.d.push_back(r.boundary[k]);
  c.d.push_back(r.augmentation);
  auto h = complex_cohomology(c);
  for (auto& d : h) {
    if (d.degree == c.lo) continue;  // top of the truncation
    if (d.rank || !d.torsion.empty()) return d.degree == 0 ? -1 : -d.degree - 1;
  }
  return std::nullopt;
}

// ---- coefficient complexes ---------------------------------------------------

GComplex module_complex(const FiniteGroupData& G, Ring r, std::vector<ExactMatrix> mats) {
  GComplex W;
  W.group = G;
  for (std::size_t g = 0; g < G.order(); ++g) W.subgroup.push_back(int(g));
  W.X.ring = r;
  W.X.lo = 0;
  W.X.dims = {mats.empty() ? 0 : mats[0].rows()};
  for (auto& m : mats) W.action.push_back({m});
  W.min_degree = 0;
  return W;
}

GComplex trivial_module(const FiniteGroupData& G, Ring r) {
  std::vector<ExactMatrix> m(G.order(), ExactMatrix::identity(1, r));
  GComplex W = module_complex(G, r, m);
  W.product = [r](int, const Vec& a, int, const Vec& b) { return Vec{r.reduce(a[0] * b[0])}; };
  return W;
}

GComplex conjugation_module(const FiniteGroupData& G, Ring r) {
  const std::size_t n = G.order();
  std::vector<ExactMatrix> m;
  for (std::size_t k = 0; k < n; ++k) {
    MatrixBuilder b(n, n, r);
    for (std::size_t h = 0; h < n; ++h) b.add(std::size_t(G.conj(int(k), int(h))), h, Rat(1));
    m.push_back(b.build());
  }
  GComplex W = module_complex(G, r, m);
  W.product = [G, r](int, const Vec& a, int, const Vec& b) {
    Vec c = zero_vec(G.order());
    for (std::size_t g = 0; g < a.size(); ++g) {
      if (a[g] == 0) continue;
      for (std::size_t h = 0; h < b.size(); ++h)
        if (b[h] != 0) c[G.mul(int(g), int(h))] += a[g] * b[h];
    }
    for (auto& x : c) x = r.reduce(x);
    return c;
  };
  return W;
}

GComplex restrict_to(const GComplex& W, const std::vector<int>& subgroup) {
  if (!W.group.is_subgroup(subgroup)) throw Error(ErrorKind::NotASubgroup, "elements do not form a subgroup");
  for (int h : subgroup)
    if (!std::binary_search(W.subgroup.begin(), W.subgroup.end(), h))
      throw Error(ErrorKind::NotASubgroup, "not contained in the acting subgroup");
  GComplex R = W;
  R.subgroup = subgroup;
  std::sort(R.subgroup.begin(), R.subgroup.end());
  return R;
}

// ---- the cochain complex -----------------------------------------------------

GroupCochains::GroupCochains(GComplex W, int NG, int lo, int hi) : W_(std::move(W)), NG_(NG), lo_(lo), hi_(hi) {
  if (NG < 0) throw Error(ErrorKind::WindowTooWide, "negative group truncation");
  if (hi < lo) throw Error(ErrorKind::WindowTooWide, "empty degree window");
  const auto& G = W_.group;
  pos_.assign(G.order(), -1);
  for (int h : W_.subgroup)
    if (h != G.identity()) {
      pos_[h] = long(nonid_.size());
      nonid_.push_back(h);
    }
  const std::size_t m = nonid_.size();
  for (int n = lo; n <= hi; ++n) {
    std::vector<Block> bl;
    std::size_t off = 0, tuples = 1;
    for (int p = 0; p <= NG; ++p) {
      if (p > 0) tuples *= m;
      if (tuples == 0) break;
      int q = n - p;
      if (!W_.in_range(q)) continue;
      std::size_t xd = W_.X.dim(q);
      if (xd == 0) continue;
      bl.push_back({p, q, off, tuples, xd});
      off += tuples * xd;
    }
    blocks_.push_back(std::move(bl));
  }
}

std::size_t GroupCochains::dim(int n) const {
  if (n < lo_ || n > hi_) return 0;
  auto& b = blocks_[n - lo_];
  return b.empty() ? 0 : b.back().offset + b.back().tuples * b.back().xdim;
}

const GroupCochains::Block* GroupCochains::block(int n, int p) const {
  if (n < lo_ || n > hi_) return nullptr;
  for (auto& b : blocks_[n - lo_])
    if (b.p == p) return &b;
  return nullptr;
}

std::vector<int> GroupCochains::tuple(int p, std::size_t idx) const {
  std::vector<int> t(p);
  const std::size_t m = nonid_.size();
  for (int i = p - 1; i >= 0; --i) {
    t[i] = nonid_[idx % m];
    idx /= m;
  }
  return t;
}

long GroupCochains::tuple_index(const std::vector<int>& t) const {
  long idx = 0;
  for (int g : t) {
    if (pos_[g] < 0) return -1;
    idx = idx * long(nonid_.size()) + pos_[g];
  }
  return idx;
}

ExactMatrix GroupCochains::differential(int n) const {
  if (n < lo_ || n >= hi_) throw Error(ErrorKind::WindowTooWide, "differential outside the window");
  const auto& G = W_.group;
  MatrixBuilder B(dim(n + 1), dim(n), W_.X.ring);
  for (auto& blk : blocks(n)) {
    const int p = blk.p, q = blk.q;
    const Block* hor = block(n + 1, p + 1);
    const Block* ver = block(n + 1, p);
    const ExactMatrix* dX = W_.X.diff(q);
    std::vector<ExactMatrix> actT;
    if (hor)
      for (int h : nonid_) actT.push_back(W_.act(h, q).transpose());
    for (std::size_t ti = 0; ti < blk.tuples; ++ti) {
      auto t = tuple(p, ti);
      for (std::size_t x = 0; x < blk.xdim; ++x) {
        const std::size_t col = blk.offset + ti * blk.xdim + x;
        if (hor) {
          // h_1 . a(h_2 ..)
          for (std::size_t hi = 0; hi < nonid_.size(); ++hi) {
            long row_t = long(hi) * long(blk.tuples) + long(ti);
            for (auto& [y, c] : actT[hi].row(x)) B.add(hor->offset + std::size_t(row_t) * hor->xdim + y, col, c);
          }
          // splittings t_i = a b
          for (int i = 0; i < p; ++i) {
            for (int a : nonid_) {
              int b = G.mul(G.inv(a), t[i]);
              if (b == G.identity()) continue;
              std::vector<int> s(t.begin(), t.begin() + i);
              s.push_back(a);
              s.push_back(b);
              s.insert(s.end(), t.begin() + i + 1, t.end());
              long ri = tuple_index(s);
              B.add(hor->offset + std::size_t(ri) * hor->xdim + x, col, Rat(sgn(i + 1)));
            }
          }
          // a(h_1..h_p) with h_{p+1} appended
          for (std::size_t hi = 0; hi < nonid_.size(); ++hi) {
            long ri = long(ti) * long(nonid_.size()) + long(hi);
            B.add(hor->offset + std::size_t(ri) * hor->xdim + x, col, Rat(sgn(p + 1)));
          }
        }
      }
    }
    if (ver && dX) {
      auto dT = dX->transpose();
      int f = sgn(p);
      for (std::size_t ti = 0; ti < blk.tuples; ++ti)
        for (std::size_t x = 0; x < blk.xdim; ++x)
          for (auto& [y, c] : dT.row(x))
            B.add(ver->offset + ti * ver->xdim + y, blk.offset + ti * blk.xdim + x, f * c);
    }
  }
  return B.build();
}

CochainComplex GroupCochains::complex() const {
  CochainComplex c;
  c.ring = W_.X.ring;
  c.lo = lo_;
  for (int n = lo_; n <= hi_; ++n) c.dims.push_back(dim(n));
  for (int n = lo_; n < hi_; ++n) c.d.push_back(differential(n));
  return c;
}

Vec GroupCochains::product(int n, const Vec& a, int m, const Vec& b) const {
  if (!W_.product) throw Error(ErrorKind::TargetMismatch, "coefficients carry no product");
  const auto& G = W_.group;
  const auto& r = W_.X.ring;
  Vec out = zero_vec(dim(n + m));
  if (n + m < lo_ || n + m > hi_) throw Error(ErrorKind::WindowTooWide, "product degree outside the window");
  for (auto& ba : blocks(n))
    for (auto& bb : blocks(m)) {
      const Block* bc = block(n + m, ba.p + bb.p);
      if (!bc || bc->q != ba.q + bb.q) continue;
      const int f = sgn(long(ba.q) * bb.p);
      for (std::size_t ta = 0; ta < ba.tuples; ++ta) {
        Vec va(a.begin() + long(ba.offset + ta * ba.xdim), a.begin() + long(ba.offset + (ta + 1) * ba.xdim));
        if (is_zero(va)) continue;
        auto t = tuple(ba.p, ta);
        int g = G.identity();
        for (int h : t) g = G.mul(g, h);
        const ExactMatrix& act = W_.act(g, bb.q);
        for (std::size_t tb = 0; tb < bb.tuples; ++tb) {
          Vec vb(b.begin() + long(bb.offset + tb * bb.xdim), b.begin() + long(bb.offset + (tb + 1) * bb.xdim));
          if (is_zero(vb)) continue;
          Vec prod = W_.product(ba.q, va, bb.q, act.apply(vb));
          std::size_t tc = ta;
          for (int i = 0; i < bb.p; ++i) tc *= nonid_.size();
          tc += tb;
          for (std::size_t x = 0; x < prod.size(); ++x)
            if (prod[x] != 0) {
              auto& o = out[bc->offset + tc * bc->xdim + x];
              o = r.reduce(o + f * prod[x]);
            }
        }
      }
    }
  return out;
}

// ---- restriction and transfer --------------------------------------------------

Vec restrict_cochain(const GroupCochains& from, const GroupCochains& to, int n, const Vec& v) {
  Vec out = zero_vec(to.dim(n));
  for (auto& bt : to.blocks(n)) {
    const auto* bf = from.block(n, bt.p);
    if (!bf) continue;
    for (std::size_t ti = 0; ti < bt.tuples; ++ti) {
      long fi = from.tuple_index(to.tuple(bt.p, ti));
      for (std::size_t x = 0; x < bt.xdim; ++x) out[bt.offset + ti * bt.xdim + x] = v[bf->offset + fi * bf->xdim + x];
    }
  }
  return out;
}

Vec corestrict_cochain(const GroupCochains& ambient, const GroupCochains& sub, int n, const Vec& v) {
  const auto& W = ambient.coefficients();
  const auto& G = W.group;
  const auto& H = sub.coefficients().subgroup;
  const auto& r = W.X.ring;
  std::vector<char> inH(G.order(), 0);
  for (int h : H) inH[h] = 1;
  // least element of the right coset Hx, and left coset representatives tH
  std::vector<int> bar(G.order());
  for (std::size_t x = 0; x < G.order(); ++x) {
    int best = int(G.order());
    for (int h : H) best = std::min(best, G.mul(h, int(x)));
    bar[x] = best;
  }
  std::vector<int> reps;
  std::vector<char> seen(G.order(), 0);
  for (std::size_t t = 0; t < G.order(); ++t) {
    if (seen[t]) continue;
    reps.push_back(int(t));
    for (int h : H) seen[G.mul(int(t), h)] = 1;
  }
  auto rho = [&](int x) { return G.mul(x, G.inv(bar[x])); };
  Vec out = zero_vec(ambient.dim(n));
  for (auto& ba : ambient.blocks(n)) {
    const auto* bs = sub.block(n, ba.p);
    if (!bs) continue;
    for (std::size_t ti = 0; ti < ba.tuples; ++ti) {
      auto g = ambient.tuple(ba.p, ti);
      std::vector<int> x{G.identity()};
      for (int gi : g) x.push_back(G.mul(x.back(), gi));
      Vec acc = zero_vec(ba.xdim);
      for (int t : reps) {
        std::vector<int> y;
        for (int xi : x) y.push_back(rho(G.mul(G.inv(t), xi)));
        std::vector<int> s;
        for (std::size_t i = 1; i < y.size(); ++i) s.push_back(G.mul(G.inv(y[i - 1]), y[i]));
        long si = sub.tuple_index(s);
        if (si < 0) continue;
        Vec val(v.begin() + long(bs->offset + std::size_t(si) * bs->xdim),
                v.begin() + long(bs->offset + std::size_t(si + 1) * bs->xdim));
        Vec w = W.act(G.mul(t, y[0]), ba.q).apply(val);
        for (std::size_t k = 0; k < w.size(); ++k) acc[k] += w[k];
      }
      for (std::size_t k = 0; k < ba.xdim; ++k) out[ba.offset + ti * ba.xdim + k] = r.reduce(acc[k]);
    }
  }
  return out;
}

// ---- cohomology ------------------------------------------------------------------

const DegreeCohomology* GroupCohomologyResult::at(int n) const {
  for (auto& d : degrees)
    if (d.degree == n) return &d;
  return nullptr;
}

std::vector<ProductEntry> product_table(const CochainComplex& c, int lo, int hi,
                                        const std::function<Vec(int, const Vec&, int, const Vec&)>& mul) {
  std::map<int, ClassReducer> red;
  auto reducer = [&](int n) -> const ClassReducer& {
    auto it = red.find(n);
    if (it == red.end()) it = red.emplace(n, ClassReducer(c.diff(n - 1), c.diff(n), c.dim(n), c.ring)).first;
    return it->second;
  };
  std::vector<ProductEntry> out;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      if (a + b < lo || a + b > hi) continue;
      const auto& ra = reducer(a);
      const auto& rb = reducer(b);
      const auto& rc = reducer(a + b);
      for (std::size_t i = 0; i < ra.generators().size(); ++i)
        for (std::size_t j = 0; j < rb.generators().size(); ++j)
          out.push_back({a, i, b, j, rc.coordinates(mul(a, ra.generators()[i], b, rb.generators()[j]))});
    }
  return out;
}

namespace {

std::vector<DegreeCohomology> interior(const CochainComplex& c, bool reps) {
  auto all = complex_cohomology(c, reps, false);
  return std::vector<DegreeCohomology>(all.begin() + 1, all.end() - 1);
}

}  // namespace

bool group_complete(const GComplex& W, int NG, int m) {
  if (W.subgroup.size() <= 1) return true;
  return W.min_degree && m - NG - 1 < *W.min_degree;
}

GroupCohomologyResult ext_over_zg(const GComplex& W, int NG, int lo, int hi, bool products) {
  GroupCochains C(W, NG, lo - 1, hi + 1);
  auto cx = C.complex();
  GroupCohomologyResult r;
  r.NG = NG;
  r.degrees = interior(cx, false);
  std::vector<DegreeCohomology> prev;
  for (auto& d : r.degrees) {
    if (group_complete(W, NG, d.degree) && group_complete(W, NG, d.degree + 1)) {
      d.status = Status::Proved;
      continue;
    }
    if (NG == 0) {
      d.status = Status::Unstable;
      continue;
    }
    if (prev.empty()) prev = interior(GroupCochains(W, NG - 1, lo - 1, hi + 1).complex(), false);
    d.status = prev[d.degree - lo].same_group(d) ? Status::Certified : Status::Unstable;
  }
  if (products && W.product)
    r.products = product_table(cx, lo, hi, [&](int a, const Vec& x, int b, const Vec& y) { return C.product(a, x, b, y); });
  return r;
}

std::vector<DegreeCohomology> periodic_cyclic_cohomology(const GComplex& W, int lo, int hi) {
  const auto& G = W.group;
  int gen = -1;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (G.element_order(int(g)) == int(G.order())) {
      gen = int(g);
      break;
    }
  if (gen < 0) throw Error(ErrorKind::ValidationError, "group is not cyclic");
  if (W.X.lo != 0 || W.X.dims.size() != 1) throw Error(ErrorKind::ShapeMismatch, "oracle needs a module in degree 0");
  const std::size_t n = W.X.dim(0);
  const auto& r = W.X.ring;
  MatrixBuilder gm(n, n, r), nm(n, n, r);
  const auto gt = W.act(gen, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& [j, c] : gt.row(i)) gm.add(i, j, c);
    gm.add(i, i, Rat(-1));
  }
  for (std::size_t g = 0; g < G.order(); ++g) {
    const auto& a = W.act(int(g), 0);
    for (std::size_t i = 0; i < n; ++i)
      for (auto& [j, c] : a.row(i)) nm.add(i, j, c);
  }
  ExactMatrix gminus = gm.build(), norm = nm.build();
  CochainComplex c;
  c.ring = r;
  c.lo = 0;
  const int top = std::max(hi + 1, 1);
  for (int k = 0; k <= top; ++k) c.dims.push_back(n);
  for (int k = 0; k < top; ++k) c.d.push_back(k % 2 == 0 ? gminus : norm);
  auto h = complex_cohomology(c);
  std::vector<DegreeCohomology> out;
  for (int k = lo; k <= hi; ++k) {
    DegreeCohomology d;
    d.degree = k;
    if (k >= 0) d = h[k];
    d.status = Status::Proved;
    out.push_back(d);
  }
  return out;
}

DegreeCohomology direct_sum(const std::vector<DegreeCohomology>& parts) {
  DegreeCohomology s;
  if (parts.empty()) return s;
  s.degree = parts[0].degree;
  s.status = Status::Proved;
  std::vector<Int> tors;
  for (auto& p : parts) {
    s.rank += p.rank;
    s.dim += p.dim;
    tors.insert(tors.end(), p.torsion.begin(), p.torsion.end());
    if (int(p.status) > int(s.status)) s.status = p.status;
  }
  if (!tors.empty()) {
    std::vector<std::vector<Rat>> d(tors.size(), std::vector<Rat>(tors.size(), Rat(0)));
    for (std::size_t i = 0; i < tors.size(); ++i) d[i][i] = Rat(tors[i]);
    for (auto& x : elementary_divisors(ExactMatrix::from_dense(d, Ring::Z())))
      if (x > 1) s.torsion.push_back(x);
  }
  return s;
}

PullPushResult pullpush_hh_group_ring(const FiniteGroupData& G, Ring r, int NG, int lo, int hi) {
  PullPushResult out;
  out.representatives = G.representatives();
  for (int g : out.representatives) {
    auto W = restrict_to(trivial_module(G, r), G.centralizer(g));
    out.summands.push_back(ext_over_zg(W, NG, lo, hi, G.is_abelian()));
  }
  for (int n = lo; n <= hi; ++n) {
    std::vector<DegreeCohomology> parts;
    for (auto& s : out.summands) parts.push_back(*s.at(n));
    out.total.push_back(direct_sum(parts));
  }
  if (G.is_abelian()) {
    out.has_products = true;
    const auto& base = out.summands[0];  // C(e) = G; every summand is H^*(G)
    for (auto& e : base.products) {
      const std::size_t na = base.at(e.deg_a)->torsion.size() + base.at(e.deg_a)->rank;
      const std::size_t nb = base.at(e.deg_b)->torsion.size() + base.at(e.deg_b)->rank;
      const std::size_t nc = e.coords.size();
      for (std::size_t g = 0; g < G.order(); ++g)
        for (std::size_t h = 0; h < G.order(); ++h) {
          ProductEntry p;
          p.deg_a = e.deg_a;
          p.a = g * na + e.a;
          p.deg_b = e.deg_b;
          p.b = h * nb + e.b;
          p.coords.assign(G.order() * nc, Rat(0));
          const std::size_t gh = std::size_t(G.mul(int(g), int(h)));
          for (std::size_t k = 0; k < nc; ++k) p.coords[gh * nc + k] = e.coords[k];
          out.products.push_back(std::move(p));
        }
    }
  }
  return out;
}

}  // namespace hh
