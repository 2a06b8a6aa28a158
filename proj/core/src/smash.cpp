#include "hh/smash.hpp"

#include "hh/error.hpp"

namespace hh {

namespace {

LinComb column(const ExactMatrix& m, std::size_t j) {
  LinComb c;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat x = m.at(i, j);
    if (x != 0) c.push_back({std::uint32_t(i), x});
  }
  return c;
}

std::vector<std::vector<LinComb>> columns(const AlgebraAction& act) {
  std::vector<std::vector<LinComb>> out;
  for (auto& s : act.sigma) {
    auto t = s.transpose();
    std::vector<LinComb> cols(s.cols());
    for (std::size_t j = 0; j < s.cols(); ++j) cols[j] = LinComb(t.row(j).begin(), t.row(j).end());
    out.push_back(std::move(cols));
  }
  return out;
}

}  // namespace

SmashAlgebra smash_product(const FiniteDgAlgebra& A, const AlgebraAction& act) {
  if (auto rep = validate_action(A, act); !rep.ok) throw Error(ErrorKind::InvalidAction, rep.message());
  const auto& G = act.group;
  const std::size_t n = G.order();
  auto cols = columns(act);
  SmashAlgebra S;
  S.base = A;
  S.action = act;
  FiniteDgAlgebra& R = S.algebra;
  R.ring = A.ring;
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t g = 0; g < n; ++g) R.basis.push_back({A.basis[a].label + "#" + G.labels()[g], A.deg(a)});
  R.unit = S.index(A.unit, G.identity());
  R.init_tables();
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t g = 0; g < n; ++g)
      for (std::size_t y = 0; y < A.dim(); ++y)
        for (std::size_t h = 0; h < n; ++h) {
          LinComb c;
          const int gh = G.mul(int(g), int(h));
          for (auto& [z, s] : cols[g][y])
            for (auto& [w, t] : A.mult[x][z]) c.push_back({std::uint32_t(S.index(w, gh)), s * t});
          std::sort(c.begin(), c.end(), [](auto& p, auto& q) { return p.first < q.first; });
          LinComb merged;
          for (auto& e : c) {
            if (!merged.empty() && merged.back().first == e.first)
              merged.back().second += e.second;
            else
              merged.push_back(e);
          }
          R.set_product(S.index(x, int(g)), S.index(y, int(h)), merged);
        }
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t g = 0; g < n; ++g) {
      LinComb c;
      for (auto& [w, t] : A.diff[x]) c.push_back({std::uint32_t(S.index(w, int(g))), t});
      R.set_diff(S.index(x, int(g)), c);
    }
  if (A.augmentation) {
    Vec aug = zero_vec(R.dim());
    for (std::size_t x = 0; x < A.dim(); ++x)
      for (std::size_t g = 0; g < n; ++g) aug[S.index(x, int(g))] = (*A.augmentation)[x];
    R.augmentation = aug;
  }
  if (auto rep = validate_algebra(R); !rep.ok) throw Error(ErrorKind::InvalidAction, "smash product: " + rep.message());
  // A and the group ring embed as sub-dg-rings
  const int e = G.identity();
  for (std::size_t x = 0; x < A.dim(); ++x)
    for (std::size_t y = 0; y < A.dim(); ++y) {
      LinComb c;
      for (auto& [w, t] : A.mult[x][y]) c.push_back({std::uint32_t(S.index(w, e)), t});
      if (R.mult[S.index(x, e)][S.index(y, e)] != normalize(c, A.ring))
        throw Error(ErrorKind::InvalidAction, "A does not embed in A#G");
    }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      LinComb c{{std::uint32_t(S.index(A.unit, G.mul(int(g), int(h)))), Rat(1)}};
      if (R.mult[S.index(A.unit, int(g))][S.index(A.unit, int(h))] != c)
        throw Error(ErrorKind::InvalidAction, "group ring does not embed in A#G");
    }
  return S;
}

DgBimodule twisted_bimodule(const FiniteDgAlgebra& A, const AlgebraAction& act, int g) {
  DgBimodule M = regular_bimodule(A);
  const ExactMatrix& s = act.sigma[g];
  for (std::size_t a = 0; a < A.dim(); ++a) {
    LinComb ga = column(s, a);
    for (std::size_t m = 0; m < A.dim(); ++m) {
      LinComb c;
      for (auto& [b, x] : ga)
        for (auto& [k, y] : A.mult[m][b]) c.push_back({k, x * y});
      std::sort(c.begin(), c.end(), [](auto& p, auto& q) { return p.first < q.first; });
      LinComb merged;
      for (auto& e : c) {
        if (!merged.empty() && merged.back().first == e.first)
          merged.back().second += e.second;
        else
          merged.push_back(e);
      }
      M.right[a][m] = normalize(merged, A.ring);
    }
  }
  return M;
}

DgBimodule smash_bimodule(const SmashAlgebra& S) {
  const auto& A = S.base;
  const auto& R = S.algebra;
  const int e = S.group().identity();
  DgBimodule M;
  M.ring = R.ring;
  M.basis = R.basis;
  M.diff = R.diff;
  M.left.assign(A.dim(), std::vector<LinComb>(R.dim()));
  M.right.assign(A.dim(), std::vector<LinComb>(R.dim()));
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (std::size_t m = 0; m < R.dim(); ++m) {
      M.left[a][m] = R.mult[S.index(a, e)][m];
      M.right[a][m] = R.mult[m][S.index(a, e)];
    }
  return M;
}

AlgebraAction conjugation_action(const SmashAlgebra& S) {
  const auto& G = S.group();
  const auto& A = S.base;
  auto cols = columns(S.action);
  AlgebraAction act;
  act.group = G;
  for (std::size_t k = 0; k < G.order(); ++k) {
    MatrixBuilder b(S.algebra.dim(), S.algebra.dim(), A.ring);
    for (std::size_t x = 0; x < A.dim(); ++x)
      for (std::size_t h = 0; h < G.order(); ++h)
        for (auto& [y, c] : cols[k][x]) b.add(S.index(y, G.conj(int(k), int(h))), S.index(x, int(h)), c);
    act.sigma.push_back(b.build());
  }
  return act;
}

ConjugacyData conjugacy_data(const FiniteGroupData& G) {
  ConjugacyData c;
  c.classes = G.classes();
  c.representatives = G.representatives();
  for (int g : c.representatives) c.centralizers.push_back(G.centralizer(g));
  return c;
}

}  // namespace hh
