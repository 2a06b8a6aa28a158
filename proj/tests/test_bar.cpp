#include "doctest.h"
#include "helpers.hpp"
#include "hh/error.hpp"

using namespace hh;
using namespace hh::test;

namespace {

std::vector<FiniteDgAlgebra> sample_algebras() {
  return {exterior_algebra(Ring::Q(), 1), truncated_polynomial(Ring::Q(), 2, 3), interval_algebra(Ring::Q()),
          tensor(exterior_algebra(Ring::Q(), 1), exterior_algebra(Ring::Q(), 2)),
          interval_algebra(Ring::Z())};
}

void check_squares_to_zero(const HochschildSpace& s) {
  for (int n = s.lo(); n + 2 <= s.hi(); ++n) {
    ExactMatrix dd = s.differential(n + 1) * s.differential(n);
    CHECK_MESSAGE(dd.is_zero(), "degree " << n);
  }
}

}  // namespace

TEST_CASE("word table prunes by degree") {
  WordTable t({1, 1}, 3, 0, 0);
  CHECK(t.size() == 1 + 2 + 4 + 8);
  WordTable u({2}, 4, 1, 2);
  CHECK(u.size() == 2);
  CHECK(u.find(Word{0, 0}) >= 0);
  CHECK(u.find(Word{0, 0, 0}) < 0);
}

TEST_CASE("exterior algebra degree-0 cochains at N = 3") {
  auto A = exterior_algebra(Ring::Q(), 1);
  HochschildSpace s(A, regular_bimodule(A), 3, -1, 2);
  CHECK(s.dim(0) == 4);
}

TEST_CASE("transported differential squares to zero") {
  for (auto& A : sample_algebras()) {
    auto M = regular_bimodule(A);
    check_squares_to_zero(HochschildSpace(A, M, 3, -4, 4));
    check_squares_to_zero(HochschildSpace(A, dual_bimodule(A, M), 3, -4, 4));
  }
}

TEST_CASE("chain differential squares to zero") {
  for (auto& A : sample_algebras()) {
    auto M = regular_bimodule(A);
    check_squares_to_zero(HochschildSpace(A, M, 3, -4, 4, HochschildSpace::Kind::Chains));
  }
}

TEST_CASE("differential of explicit cochains matches the matrix") {
  std::mt19937 g(7);
  for (auto& A : sample_algebras()) {
    auto M = regular_bimodule(A);
    HochschildSpace s(A, M, 3, -3, 3);
    for (int n = -2; n <= 1; ++n) {
      auto f = random_cochain(g, A, M, n, 2);
      Vec v = cochain_to_vector(s, n, f);
      Vec dv = s.differential(n).apply(v);
      auto df = cochain_differential(A, M, f);
      CHECK(cochain_to_vector(s, n + 1, df) == dv);
    }
  }
}

TEST_CASE("cup product satisfies the Leibniz rule") {
  std::mt19937 g(11);
  for (auto& A : sample_algebras()) {
    auto M = regular_bimodule(A);
    for (int trial = 0; trial < 6; ++trial) {
      int p = trial % 3 - 1, q = (trial / 3) - 1;
      auto a = random_cochain(g, A, M, p, 2);
      auto b = random_cochain(g, A, M, q, 2);
      auto lhs = cochain_differential(A, M, cup_product(A, a, b));
      auto rhs = cup_product(A, cochain_differential(A, M, a), b);
      auto t = cup_product(A, a, cochain_differential(A, M, b));
      for (auto& [w, v] : t.values) {
        Vec x = v;
        if (sgn(p) < 0)
          for (auto& y : x) y = -y;
        rhs.add(w, x, A.ring);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("bar resolution differential squares to zero") {
  for (auto& A : sample_algebras()) {
    ReducedPart ab = reduced_part(A);
    for (auto& w : all_words(ab.dim(), 3)) {
      BarElem x{{BarTerm{std::uint32_t(A.unit), w, std::uint32_t(A.unit)}, Rat(1)}};
      CHECK(bar_differential(A, bar_differential(A, x)).empty());
    }
  }
}

TEST_CASE("lifts are chain maps and sections of eps_*") {
  std::mt19937 g(5);
  for (auto& A : sample_algebras()) {
    auto M = regular_bimodule(A);
    const int L = 3;
    for (int n = -1; n <= 1; ++n) {
      auto f = random_cochain(g, A, M, n, 2);
      auto df = cochain_differential(A, M, f);
      CHECK(eps_star(A, lift_tilde(A, f, L)) == f);
      CHECK(eps_star(A, lift_hat(A, f, L)) == f);
      CHECK(endo_differential(A, lift_tilde(A, f, L), L) == lift_tilde(A, df, L));
      CHECK(endo_differential(A, lift_hat(A, f, L), L) == lift_hat(A, df, L));
      auto f2 = random_cochain(g, A, M, 1 - n, 1);
      auto comp = compose(A, lift_tilde(A, f, L), lift_hat(A, f2, L), L);
      auto prod = cup_product(A, f, f2);
      auto lhs = eps_star(A, comp);
      HochschildCochain rhs;
      rhs.degree = prod.degree;
      for (auto& [w, v] : prod.values)
        if (int(w.size()) <= L) rhs.add(w, v, A.ring);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("chains dualize to cochains with dual coefficients") {
  for (auto& A : sample_algebras()) {
    if (!A.ring.is_field()) continue;
    auto M = regular_bimodule(A);
    auto Md = dual_bimodule(A, M);
    const int N = 3;
    auto ch = complex_cohomology(HochschildSpace(A, M, N, -5, 5, HochschildSpace::Kind::Chains).complex());
    auto co = complex_cohomology(HochschildSpace(A, Md, N, -5, 5).complex());
    for (int n = -4; n <= 4; ++n) CHECK_MESSAGE(ch[n + 5].rank == co[-n + 5].rank, "degree " << n);
  }
}

TEST_CASE("exterior algebra: HH^0 at truncation N has dimension N + 1") {
  auto A = exterior_algebra(Ring::Q(), 1);
  for (int N = 1; N <= 5; ++N) {
    auto r = hochschild_cohomology(A, regular_bimodule(A), N, 0, 1);
    CHECK(r.at(0)->rank == std::size_t(N + 1));
    CHECK(r.at(0)->status == Status::Unstable);
  }
}

TEST_CASE("positively graded letters give proved degrees") {
  auto A = exterior_algebra(Ring::Q(), 2);
  const int N = 3;
  auto r = hochschild_cohomology(A, regular_bimodule(A), N, -3, 3);
  for (auto& d : r.degrees) CHECK((d.status == Status::Proved) == (d.degree >= 2 - N));
}
