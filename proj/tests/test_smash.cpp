#include <doctest.h>

#include <algorithm>

#include "hh/error.hpp"
#include "hh/smash.hpp"

using namespace hh;

namespace {

AlgebraAction sign_action(const FiniteGroupData& G, const FiniteDgAlgebra& A) {
  AlgebraAction act{G, {}};
  for (std::size_t g = 0; g < G.order(); ++g) {
    int s = G.element_order(int(g)) == 2 ? -1 : 1;
    std::vector<std::vector<Rat>> m(A.dim(), std::vector<Rat>(A.dim(), Rat(0)));
    for (std::size_t i = 0; i < A.dim(); ++i) m[i][i] = A.deg(i) % 2 ? Rat(s) : Rat(1);
    act.sigma.push_back(ExactMatrix::from_dense(m, A.ring));
  }
  return act;
}

}  // namespace

TEST_CASE("smash product of the exterior algebra with the sign action") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = cyclic_group(2);
  auto S = smash_product(A, sign_action(G, A));
  CHECK(S.algebra.dim() == 4);
  CHECK(validate_algebra(S.algebra).ok);
  std::size_t x = *A.index_of("x");
  // (1#g)(x#e) = g(x)#g = -x#g
  Vec p = S.algebra.mul(S.algebra.basis_vec(S.index(A.unit, 1)), S.algebra.basis_vec(S.index(x, 0)));
  Vec want = zero_vec(4);
  want[S.index(x, 1)] = -1;
  CHECK(p == want);
  // (x#e)(1#g) = x#g
  p = S.algebra.mul(S.algebra.basis_vec(S.index(x, 0)), S.algebra.basis_vec(S.index(A.unit, 1)));
  want[S.index(x, 1)] = 1;
  CHECK(p == want);
}

TEST_CASE("smash product with the trivial group is the algebra itself") {
  auto A = truncated_polynomial(Ring::Z(), 2, 3);
  auto S = smash_product(A, trivial_action(cyclic_group(1), A));
  REQUIRE(S.algebra.dim() == A.dim());
  CHECK(S.algebra.unit == A.unit);
  CHECK(S.algebra.mult == A.mult);
  CHECK(S.algebra.diff == A.diff);
}

TEST_CASE("ground ring smashed with a group is the group ring") {
  auto R = ground_algebra(Ring::Z());
  auto G = symmetric_group3();
  auto S = smash_product(R, trivial_action(G, R));
  REQUIRE(S.algebra.dim() == 6);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      LinComb want{{std::uint32_t(G.mul(g, h)), Rat(1)}};
      CHECK(S.algebra.mult[g][h] == want);
    }
}

TEST_CASE("invalid actions are rejected") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = cyclic_group(2);
  auto act = trivial_action(G, A);
  act.sigma[1] = ExactMatrix::from_dense({{1, 0}, {0, 2}}, Ring::Q());
  CHECK_THROWS_AS(smash_product(A, act), Error);
}

TEST_CASE("twisted bimodule uses the group on the right") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto act = sign_action(cyclic_group(2), A);
  auto M = twisted_bimodule(A, act, 1);
  CHECK(validate_bimodule(A, M).ok);
  std::size_t x = *A.index_of("x");
  Vec one = A.unit_vec(), xv = A.basis_vec(x);
  Vec minus_x = xv;
  for (auto& c : minus_x) c = -c;
  CHECK(M.act_right(one, xv) == minus_x);
  CHECK(M.act_left(xv, one) == xv);
}

TEST_CASE("conjugation permutes the twisted summands") {
  auto A = exterior_algebra(Ring::Q(), 1);
  auto G = symmetric_group3();
  auto S = smash_product(A, sign_action(G, A));
  auto conj = conjugation_action(S);
  CHECK(validate_action(S.algebra, conj).ok);
  for (int k = 0; k < 6; ++k)
    for (std::size_t a = 0; a < A.dim(); ++a)
      for (int h = 0; h < 6; ++h) {
        Vec v = conj.apply(k, S.algebra.basis_vec(S.index(a, h)));
        for (std::size_t i = 0; i < v.size(); ++i)
          if (v[i] != 0) CHECK(int(i % 6) == G.conj(k, h));
      }
}

TEST_CASE("conjugacy data of S3") {
  auto G = symmetric_group3();
  auto c = conjugacy_data(G);
  REQUIRE(c.classes.size() == 3);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < 3; ++i) {
    sizes.push_back(c.centralizers[i].size());
    CHECK(c.classes[i].size() * c.centralizers[i].size() == 6);
    CHECK(G.is_subgroup(c.centralizers[i]));
    CHECK(c.representatives[i] == c.classes[i].front());
  }
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 3, 6});
}
