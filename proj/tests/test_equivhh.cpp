#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hh/equivhh.hpp"

using namespace hh;

namespace {

AlgebraAction sign_action(const FiniteGroupData& G, const FiniteDgAlgebra& A) {
  AlgebraAction act{G, {}};
  for (std::size_t g = 0; g < G.order(); ++g) {
    int s = G.element_order(int(g)) == 2 ? -1 : 1;
    std::vector<std::vector<Rat>> m(A.dim(), std::vector<Rat>(A.dim(), Rat(0)));
    for (std::size_t i = 0; i < A.dim(); ++i) m[i][i] = i == A.unit ? Rat(1) : Rat(s);
    act.sigma.push_back(ExactMatrix::from_dense(m, A.ring));
  }
  return act;
}

std::string summary(const std::vector<DegreeCohomology>& ds, const Ring& r) {
  std::string s;
  for (auto& d : ds) s += (s.empty() ? "" : ", ") + d.group_string(r);
  return s;
}

}  // namespace

TEST_CASE("double complex differentials square to zero and anticommute") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = cyclic_group(2);
  for (auto act : {trivial_action(G, A), sign_action(G, A)}) {
    auto S = smash_product(A, act);
    EquivariantDoubleComplex D(A, act, smash_coefficients(S), 3, 3, -2, 3);
    CHECK(D.check().ok);
    check_complex(D.total());
  }
  auto Z = ground_algebra(Ring::Z());
  auto S3 = symmetric_group3();
  auto act = trivial_action(S3, Z);
  EquivariantDoubleComplex D(Z, act, smash_coefficients(smash_product(Z, act)), 3, 0, 0, 3);
  CHECK(D.check().ok);
}

TEST_CASE("trivial group gives the Hochschild complex of A") {
  auto A = truncated_polynomial(Ring::Q(), 2, 3);
  auto act = trivial_action(cyclic_group(1), A);
  auto S = smash_product(A, act);
  EquivariantDoubleComplex D(A, act, smash_coefficients(S), 3, 4, -3, 2);
  HochschildSpace X(A, regular_bimodule(A), 4, -3, 2);
  for (int n = -3; n <= 2; ++n) CHECK(D.dim(n) == X.dim(n));
  auto r = hh_smash(A, act, 3, 4, -2, 1);
  auto h = hochschild_cohomology(A, regular_bimodule(A), 4, -2, 1);
  for (int n = -2; n <= 1; ++n) {
    CHECK(r.at(n)->same_group(*h.at(n)));
    CHECK(r.at(n)->status == h.at(n)->status);
  }
}

TEST_CASE("Hochschild cohomology of the group ring of Z/2 and Z/3") {
  auto Z = ground_algebra(Ring::Z());
  for (int n : {2, 3}) {
    auto G = cyclic_group(n);
    auto act = trivial_action(G, Z);
    auto r = hh_smash(Z, act, 5, 0, 0, 4);
    auto pp = pullpush_hh_group_ring(G, Ring::Z(), 5, 0, 4);
    auto oracle = periodic_cyclic_cohomology(conjugation_module(G, Ring::Z()), 0, 4);
    for (int k = 0; k <= 4; ++k) {
      CHECK(r.at(k)->status == Status::Proved);
      CHECK(r.at(k)->same_group(pp.total[k]));
      CHECK(r.at(k)->same_group(oracle[k]));
    }
    if (n == 2) CHECK(summary(r.degrees, Ring::Z()) == "Z^2, 0, Z/2 + Z/2, 0, Z/2 + Z/2");
  }
}

TEST_CASE("double complex agrees with the bar complex of the smash product") {
  struct Case {
    FiniteDgAlgebra A;
    AlgebraAction act;
    int NA;
  };
  std::vector<Case> cases;
  for (Ring r : {Ring::Q(), Ring::Z()}) {
    auto A = exterior_algebra(r, 0);
    cases.push_back({A, trivial_action(cyclic_group(2), A), 4});
    cases.push_back({A, sign_action(cyclic_group(2), A), 4});
  }
  auto Z = ground_algebra(Ring::Z());
  cases.push_back({Z, trivial_action(cyclic_group(3), Z), 5});
  cases.push_back({Z, trivial_action(symmetric_group3(), Z), 4});
  for (auto& c : cases) {
    auto S = smash_product(c.A, c.act);
    auto r = hh_smash(c.A, c.act, 4, c.NA, 0, 3);
    auto h = hochschild_cohomology(S.algebra, regular_bimodule(S.algebra), c.NA, 0, 3);
    int compared = 0;
    for (int n = 0; n <= 3; ++n) {
      if (r.at(n)->status == Status::Unstable || h.at(n)->status == Status::Unstable) continue;
      CHECK(r.at(n)->same_group(*h.at(n)));
      ++compared;
    }
    CHECK(compared > 0);
  }
}

TEST_CASE("trivial action doubles the Hochschild cohomology") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto act = trivial_action(cyclic_group(2), A);
  auto r = hh_smash(A, act, 3, 5, 0, 1);
  auto h = hochschild_cohomology(A, regular_bimodule(A), 5, 0, 1);
  for (int n = 0; n <= 1; ++n) CHECK(r.at(n)->rank == 2 * h.at(n)->rank);
}

TEST_CASE("conjugacy summands add up to the smash computation") {
  auto Z = ground_algebra(Ring::Z());
  auto act = trivial_action(symmetric_group3(), Z);
  auto split = conjugacy_split(Z, act, 4, 0, 0, 3);
  REQUIRE(split.summands.size() == 3);
  auto r = hh_smash(Z, act, 4, 0, 0, 3);
  for (int n = 0; n <= 3; ++n) CHECK(split.total[n].same_group(*r.at(n)));
  CHECK(split.summands[0].result.at(2)->torsion == std::vector<Int>{Int(2)});

  auto A = exterior_algebra(Ring::Q(), 1);
  auto triv = trivial_action(cyclic_group(2), A);
  auto s2 = conjugacy_split(A, triv, 3, 4, 0, 1);
  REQUIRE(s2.summands.size() == 2);
  auto r2 = hh_smash(A, triv, 3, 4, 0, 1);
  for (int n = 0; n <= 1; ++n) {
    CHECK(s2.summands[0].result.at(n)->same_group(*s2.summands[1].result.at(n)));
    CHECK(s2.total[n].same_group(*r2.at(n)));
  }
}

TEST_CASE("cup product on bar cochains is equivariant") {
  std::mt19937 g(11);
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = cyclic_group(2);
  auto act = sign_action(G, A);
  auto S = smash_product(A, act);
  auto W = hochschild_gcomplex(A, act, smash_coefficients(S), 3, 0, 2);
  for (int trial = 0; trial < 20; ++trial)
    for (int q = 0; q <= 2; ++q)
      for (int q2 = 0; q + q2 <= 2; ++q2) {
        Vec a = test::random_vec(g, W.X.dim(q)), b = test::random_vec(g, W.X.dim(q2));
        for (int k = 0; k < 2; ++k) {
          Vec lhs = W.product(q, W.act(k, q).apply(a), q2, W.act(k, q2).apply(b));
          Vec rhs = W.act(k, q + q2).apply(W.product(q, a, q2, b));
          CHECK(lhs == rhs);
        }
      }
}

TEST_CASE("total product satisfies Leibniz and has a unit") {
  std::mt19937 g(5);
  auto A = exterior_algebra(Ring::Q(), 0);
  auto G = cyclic_group(2);
  auto act = sign_action(G, A);
  EquivariantDoubleComplex D(A, act, smash_coefficients(smash_product(A, act)), 3, 3, 0, 4);
  auto cx = D.total();
  Vec u = D.unit();
  CHECK(is_zero(cx.diff(0)->apply(u)));
  for (int trial = 0; trial < 10; ++trial)
    for (int n = 0; n <= 1; ++n)
      for (int m = 0; n + m <= 2; ++m) {
        Vec a = test::random_vec(g, D.dim(n)), b = test::random_vec(g, D.dim(m));
        CHECK(D.product(0, u, n, a) == a);
        CHECK(D.product(n, a, 0, u) == a);
        Vec lhs = cx.diff(n + m)->apply(D.product(n, a, m, b));
        Vec t1 = D.product(n + 1, cx.diff(n)->apply(a), m, b);
        Vec t2 = D.product(n, a, m + 1, cx.diff(m)->apply(b));
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == t1[i] + (n % 2 ? -1 : 1) * t2[i]);
      }
}

TEST_CASE("products on the cohomology of the group ring of Z/2") {
  auto Z = ground_algebra(Ring::Z());
  auto act = trivial_action(cyclic_group(2), Z);
  auto r = hh_smash(Z, act, 5, 0, 0, 4, true);
  // degree 0 is the group ring itself: (g)(g) = e
  std::size_t seen = 0;
  for (auto& e : r.products)
    if (e.deg_a == 0 && e.deg_b == 0) ++seen;
  CHECK(seen == 4);
  // the unit class
  EquivariantDoubleComplex D(Z, act, smash_coefficients(smash_product(Z, act)), 5, 0, -1, 5);
  ClassReducer red0(D.total().diff(-1), D.total().diff(0), D.dim(0), Ring::Z());
  auto c = red0.coordinates(D.unit());
  Rat total = 0;
  for (auto& x : c) total += x * x;
  CHECK(total != 0);
}

TEST_CASE("E2 collapses to column 0 over Q") {
  for (auto dx : {0, 2}) {
    auto A = exterior_algebra(Ring::Q(), dx);
    auto G = cyclic_group(2);
    for (auto act : {trivial_action(G, A), sign_action(G, A)}) {
      const int NG = dx == 0 ? 3 : 8;
      auto pages = spectral_pages(A, act, NG, 4, 0, 2);
      auto r = hh_smash(A, act, NG, 4, 0, 2);
      for (int q = 0; q <= 2; ++q) {
        for (int p = 1; p < NG; ++p) CHECK(pages.e2_at(p, q)->group.rank == 0);
        if (r.at(q)->status != Status::Unstable) CHECK(pages.e2_at(0, q)->group.rank == r.at(q)->rank);
      }
    }
  }
}

TEST_CASE("E2 for the group ring of Z/2 reproduces the answer") {
  auto Z = ground_algebra(Ring::Z());
  auto act = trivial_action(cyclic_group(2), Z);
  auto pages = spectral_pages(Z, act, 5, 0, 0, 0);
  auto r = hh_smash(Z, act, 5, 0, 0, 4);
  for (int p = 0; p <= 4; ++p) CHECK(pages.e2_at(p, 0)->group.same_group(*r.at(p)));
}
