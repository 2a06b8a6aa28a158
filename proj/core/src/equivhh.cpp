#include "hh/equivhh.hpp"

#include <algorithm>
#include <functional>

#include "hh/error.hpp"

namespace hh {

EquivariantCoefficients smash_coefficients(const SmashAlgebra& S) {
  const auto& G = S.group();
  EquivariantCoefficients M;
  M.module = smash_bimodule(S);
  for (std::size_t g = 0; g < G.order(); ++g) M.subgroup.push_back(int(g));
  M.tau = conjugation_action(S).sigma;
  M.values = S.algebra;
  M.unit = S.algebra.unit;
  return M;
}

EquivariantCoefficients twisted_coefficients(const FiniteDgAlgebra& A, const AlgebraAction& act, int g) {
  const auto& G = act.group;
  EquivariantCoefficients M;
  M.module = twisted_bimodule(A, act, g);
  M.subgroup = G.centralizer(g);
  M.tau.resize(G.order());
  for (int k : M.subgroup) M.tau[k] = act.sigma[k];
  return M;
}

namespace {

// sigma on A-bar = A / (ring . 1)
ExactMatrix reduced_matrix(const ReducedPart& ab, const ExactMatrix& sigma, const Ring& r) {
  MatrixBuilder b(ab.dim(), ab.dim(), r);
  for (std::size_t a = 0; a < ab.dim(); ++a)
    for (auto& [c, v] : sigma.row(ab.index[a]))
      if (ab.pos[c] >= 0) b.add(a, std::size_t(ab.pos[c]), v);
  return b.build();
}

ExactMatrix action_matrix(const HochschildSpace& X, int n, const ExactMatrix& sinv, const ExactMatrix& tauT) {
  const auto& r = X.algebra().ring;
  const std::size_t dn = X.dim(n);
  MatrixBuilder b(dn, dn, r);
  Word w2;
  for (std::size_t i = 0; i < dn; ++i) {
    auto [wid, t] = X.elem(n, i);
    const Word w = X.words().word(wid);
    w2.assign(w.size(), 0);
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t j, Rat c) {
      if (j == w.size()) {
        long id = X.words().find(w2);
        if (id < 0) throw Error(ErrorKind::InvalidAction, "action leaves the bar word table");
        for (auto& [s, v] : tauT.row(t)) {
          long row = X.index(n, std::uint32_t(id), s);
          if (row < 0) throw Error(ErrorKind::InvalidAction, "action does not preserve degrees");
          b.add(std::size_t(row), i, c * v);
        }
        return;
      }
      for (auto& [l, v] : sinv.row(w[j])) {
        w2[j] = std::uint16_t(l);
        rec(j + 1, c * v);
      }
    };
    rec(0, Rat(1));
  }
  return b.build();
}

GComplex make_gcomplex(std::shared_ptr<HochschildSpace> X, const AlgebraAction& act, const EquivariantCoefficients& M) {
  const auto& G = act.group;
  const auto& r = X->algebra().ring;
  GComplex W;
  W.group = G;
  W.subgroup = M.subgroup;
  std::sort(W.subgroup.begin(), W.subgroup.end());
  W.X = X->complex();
  W.action.resize(G.order());
  for (int k : W.subgroup) {
    ExactMatrix sinv = reduced_matrix(X->abar(), act.sigma[G.inv(k)], r);
    ExactMatrix tauT = M.tau[k].transpose();
    for (int n = X->lo(); n <= X->hi(); ++n) W.action[k].push_back(action_matrix(*X, n, sinv, tauT));
  }
  bool bounded = true;
  for (int d : X->letter_degree())
    if (d - 1 > 0) bounded = false;
  if (bounded) {
    if (M.module.dim() == 0) W.min_degree = X->lo();
    else W.min_degree = M.module.min_degree();
  }
  if (M.values) {
    auto R = std::make_shared<FiniteDgAlgebra>(*M.values);
    W.product = [X, R](int q, const Vec& a, int q2, const Vec& b) {
      auto phi = cochain_from_vector(*X, q, a);
      auto psi = cochain_from_vector(*X, q2, b);
      return cochain_to_vector(*X, q + q2, cup_product(X->algebra(), *R, phi, psi));
    };
  }
  return W;
}

ExactMatrix combine(const ExactMatrix& a, const ExactMatrix& b, int sign) {
  MatrixBuilder m(a.rows(), a.cols(), a.ring());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (auto& [c, v] : a.row(i)) m.add(i, c, v);
    for (auto& [c, v] : b.row(i)) m.add(i, c, sign * v);
  }
  return m.build();
}

std::vector<DegreeCohomology> interior(const CochainComplex& c, bool reps) {
  auto all = complex_cohomology(c, reps, false);
  return std::vector<DegreeCohomology>(all.begin() + 1, all.end() - 1);
}

Status worst(Status a, Status b) { return int(a) > int(b) ? a : b; }

}  // namespace

GComplex hochschild_gcomplex(const FiniteDgAlgebra& A, const AlgebraAction& act, const EquivariantCoefficients& M,
                             int NA, int lo, int hi) {
  return make_gcomplex(std::make_shared<HochschildSpace>(A, M.module, NA, lo, hi), act, M);
}

EquivariantDoubleComplex::EquivariantDoubleComplex(const FiniteDgAlgebra& A, const AlgebraAction& act,
                                                   EquivariantCoefficients M, int NG, int NA, int lo, int hi)
    : A_(A), act_(act), M_(std::move(M)), NG_(NG), NA_(NA), lo_(lo), hi_(hi) {
  if (NG < 0 || NA < 0) throw Error(ErrorKind::WindowTooWide, "negative truncation");
  if (hi < lo) throw Error(ErrorKind::WindowTooWide, "empty degree window");
  X_ = std::make_shared<HochschildSpace>(A_, M_.module, NA, lo - NG, hi);
  GComplex W = make_gcomplex(X_, act_, M_);
  GComplex flat = W;
  for (auto& d : flat.X.d) d = ExactMatrix(d.rows(), d.cols(), d.ring());
  flat.product = nullptr;
  C_ = std::make_unique<GroupCochains>(std::move(W), NG, lo, hi);
  H_ = std::make_unique<GroupCochains>(std::move(flat), NG, lo, hi);
}

ExactMatrix EquivariantDoubleComplex::horizontal(int n) const { return H_->differential(n); }

ExactMatrix EquivariantDoubleComplex::vertical(int n) const {
  return combine(C_->differential(n), H_->differential(n), -1);
}

ValidationReport EquivariantDoubleComplex::check() const {
  for (int n = lo_; n + 2 <= hi_; ++n) {
    ExactMatrix h0 = horizontal(n), h1 = horizontal(n + 1), v0 = vertical(n), v1 = vertical(n + 1);
    const std::string at = "degree " + std::to_string(n);
    if (!(h1 * h0).is_zero()) return ValidationReport::fail("horizontal", at, "d_h^2 != 0");
    if (!(v1 * v0).is_zero()) return ValidationReport::fail("vertical", at, "d_v^2 != 0");
    if (!combine(h1 * v0, v1 * h0, 1).is_zero()) return ValidationReport::fail("anticommute", at, "d_h d_v + d_v d_h != 0");
  }
  return {};
}

Vec EquivariantDoubleComplex::unit() const {
  if (!M_.unit) throw Error(ErrorKind::TargetMismatch, "coefficients have no unit");
  if (lo_ > 0 || hi_ < 0) throw Error(ErrorKind::WindowTooWide, "degree 0 outside the window");
  Vec v = zero_vec(dim(0));
  const auto* b = C_->block(0, 0);
  long i = b ? X_->index_word(0, Word{}, std::uint32_t(*M_.unit)) : -1;
  if (i < 0) throw Error(ErrorKind::ShapeMismatch, "unit not in degree 0");
  v[b->offset + std::size_t(i)] = 1;
  return v;
}

const DegreeCohomology* EquivariantResult::at(int n) const {
  for (auto& d : degrees)
    if (d.degree == n) return &d;
  return nullptr;
}

EquivariantResult equivariant_cohomology(const FiniteDgAlgebra& A, const AlgebraAction& act,
                                         const EquivariantCoefficients& M, int NG, int NA, int lo, int hi,
                                         bool products, bool representatives) {
  EquivariantDoubleComplex D(A, act, M, NG, NA, lo - 1, hi + 1);
  auto cx = D.total();
  EquivariantResult r;
  r.NG = NG;
  r.NA = NA;
  r.degrees = interior(cx, representatives);
  // lowest degree of the truncated bar cochains: the group direction is exact
  // relative to them once NG reaches past it
  std::optional<int> tmin;
  for (int q = D.inner().lo(); q <= D.inner().hi() && !tmin; ++q)
    if (D.inner().dim(q) > 0) tmin = q;
  const bool low_edge = tmin && *tmin == D.inner().lo();
  std::vector<DegreeCohomology> lowA;
  for (auto& d : r.degrees) {
    const int n = d.degree;
    const auto& W = D.coefficients();
    const bool trivial = W.subgroup.size() <= 1;
    bool gdone = group_complete(W, NG, n) && group_complete(W, NG, n + 1);
    bool adone = true;
    const int pmax = trivial ? 0 : NG;
    for (int p = 0; p <= pmax && adone; ++p)
      adone = degree_complete(D.inner(), n - p) && degree_complete(D.inner(), n + 1 - p);
    if (gdone && adone) {
      d.status = Status::Proved;
      continue;
    }
    bool gtrunc = trivial || !tmin || (!low_edge && n + 1 - NG - 1 < *tmin);
    if (!gtrunc || NA == 0) {
      d.status = Status::Unstable;
      continue;
    }
    if (lowA.empty()) lowA = interior(EquivariantDoubleComplex(A, act, M, NG, NA - 1, lo - 1, hi + 1).total(), false);
    d.status = lowA[n - lo].same_group(d) ? Status::Certified : Status::Unstable;
  }
  if (products && M.values)
    r.products = product_table(cx, lo, hi, [&](int a, const Vec& x, int b, const Vec& y) { return D.product(a, x, b, y); });
  return r;
}

EquivariantResult hh_smash(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi,
                           bool products, bool representatives) {
  auto S = smash_product(A, act);
  return equivariant_cohomology(A, act, smash_coefficients(S), NG, NA, lo, hi, products, representatives);
}

ConjugacySplit conjugacy_split(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi) {
  auto rep = validate_action(A, act);
  if (!rep.ok) throw Error(ErrorKind::InvalidAction, rep.message());
  const auto& G = act.group;
  ConjugacySplit out;
  for (int g : G.representatives()) {
    auto M = twisted_coefficients(A, act, g);
    out.summands.push_back({g, M.subgroup, equivariant_cohomology(A, act, M, NG, NA, lo, hi)});
  }
  for (int n = lo; n <= hi; ++n) {
    std::vector<DegreeCohomology> parts;
    for (auto& s : out.summands) parts.push_back(*s.result.at(n));
    out.total.push_back(direct_sum(parts));
  }
  return out;
}

const SpectralEntry* SpectralPages::e2_at(int p, int q) const {
  for (auto& e : e2)
    if (e.p == p && e.q == q) return &e;
  return nullptr;
}

SpectralPages spectral_pages(const FiniteDgAlgebra& A, const AlgebraAction& act, int NG, int NA, int lo, int hi) {
  if (NG < 0) throw Error(ErrorKind::WindowTooWide, "negative group truncation");
  auto S = smash_product(A, act);
  auto M = smash_coefficients(S);
  const auto& G = act.group;
  const auto& ring = A.ring;
  auto X = std::make_shared<HochschildSpace>(A, M.module, NA, lo - 1, hi + 1);
  GComplex W = make_gcomplex(X, act, M);
  auto inner = hochschild_cohomology(A, M.module, NA, lo, hi);
  SpectralPages out;
  out.NG = NG;
  out.NA = NA;
  for (int q = lo; q <= hi; ++q) {
    const DegreeCohomology& hq = *inner.at(q);
    ClassReducer red(W.X.diff(q - 1), W.X.diff(q), W.X.dim(q), ring);
    std::size_t tuples = 1;
    for (int p = 0; p <= NG; ++p) {
      if (p > 0) tuples *= G.order() - 1;
      SpectralEntry e;
      e.p = p;
      e.q = q;
      e.group.degree = p + q;
      e.group.rank = hq.rank * tuples;
      for (auto& t : hq.torsion)
        for (std::size_t c = 0; c < tuples; ++c) e.group.torsion.push_back(t);
      std::sort(e.group.torsion.begin(), e.group.torsion.end());
      e.group.status = p == NG ? Status::Edge : hq.status;
      out.e1.push_back(std::move(e));
    }
    const auto& gens = red.generators();
    if (!red.torsion().empty()) {
      for (int p = 0; p <= NG; ++p) {
        SpectralEntry e;
        e.p = p;
        e.q = q;
        e.available = false;
        e.group.degree = p + q;
        e.group.status = Status::Unstable;
        out.e2.push_back(std::move(e));
      }
      continue;
    }
    std::vector<ExactMatrix> mats;
    for (std::size_t k = 0; k < G.order(); ++k) {
      MatrixBuilder b(gens.size(), gens.size(), ring);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        auto c = red.coordinates(W.act(int(k), q).apply(gens[j]));
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i] != 0) b.add(i, j, c[i]);
      }
      mats.push_back(b.build());
    }
    GComplex V = module_complex(G, ring, std::move(mats));
    auto h = complex_cohomology(GroupCochains(V, NG, -1, NG + 1).complex(), false, false);
    for (int p = 0; p <= NG; ++p) {
      SpectralEntry e;
      e.p = p;
      e.q = q;
      e.group = h[std::size_t(p + 1)];
      e.group.degree = p + q;
      e.group.status = p == NG ? Status::Edge : hq.status;
      e.group.representatives.clear();
      out.e2.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace hh
