#pragma once
#include <random>

#include "hh/algebra.hpp"
#include "hh/bar.hpp"

namespace hh::test {

// cochains on the 1-simplex with the unit split off: basis 1, v1, e
inline FiniteDgAlgebra interval_algebra(Ring r) {
  FiniteDgAlgebra a;
  a.ring = r;
  a.basis = {{"v0", 0}, {"v1", 0}, {"e", 1}};
  a.init_tables();
  a.set_product(0, 0, {{0, 1}});
  a.set_product(1, 1, {{1, 1}});
  a.set_product(0, 2, {{2, 1}});
  a.set_product(2, 1, {{2, 1}});
  a.set_diff(0, {{2, -1}});
  a.set_diff(1, {{2, 1}});
  a.unit = 0;
  Vec u{1, 1, 0};
  return split_unit(a, u, "1");
}

inline Vec random_vec(std::mt19937& g, std::size_t n, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  Vec v(n);
  for (auto& x : v) x = d(g);
  return v;
}

// random homogeneous cochain of degree n on words of length <= L
inline HochschildCochain random_cochain(std::mt19937& g, const FiniteDgAlgebra& A, const DgBimodule& M, int n,
                                        int L, int density = 0) {
  ReducedPart ab = reduced_part(A);
  HochschildCochain f;
  f.degree = n;
  std::uniform_int_distribution<int> d(-2, 2), coin(0, density);
  for (auto& w : all_words(ab.dim(), L)) {
    long e = eps(ab.degree, w.data(), int(w.size()));
    Vec v = zero_vec(M.dim());
    bool any = false;
    for (std::size_t t = 0; t < M.dim(); ++t)
      if (M.deg(t) - e == n && coin(g) == 0) {
        v[t] = M.ring.reduce(d(g));
        any |= v[t] != 0;
      }
    if (any) f.add(w, v, A.ring);
  }
  return f;
}

}  // namespace hh::test
