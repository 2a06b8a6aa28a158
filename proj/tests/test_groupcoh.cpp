#include <random>

#include "doctest.h"
#include "hh/error.hpp"
#include "hh/groupcoh.hpp"

using namespace hh;

namespace {

std::string groups(const std::vector<DegreeCohomology>& v, Ring r = Ring::Z()) {
  std::string s;
  for (auto& d : v) s += (s.empty() ? "" : ", ") + d.group_string(r);
  return s;
}

std::vector<DegreeCohomology> degs(const GroupCohomologyResult& r) { return r.degrees; }

}  // namespace

TEST_CASE("normalized bar resolution is exact") {
  for (auto G : {cyclic_group(1), cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
    for (bool norm : {true, false}) {
      int N = (G.order() == 6 && !norm) ? 3 : 4;
      auto r = group_bar_resolution(G, N, norm);
      for (int k = 0; k + 1 < N; ++k) CHECK((r.boundary[k] * r.boundary[k + 1]).is_zero());
      CHECK((r.augmentation * r.boundary[0]).is_zero());
      CHECK(!resolution_defect(r));
      for (int k = 0; k <= N; ++k) {
        std::size_t expect = 1;
        for (int i = 0; i < k; ++i) expect *= norm ? G.order() - 1 : G.order();
        CHECK(r.free_rank(k) == expect);
      }
    }
  }
}

TEST_CASE("trivial group resolution") {
  auto r = group_bar_resolution(cyclic_group(1), 3, true);
  CHECK(r.basis[1].empty());
  auto h = ext_over_zg(trivial_module(cyclic_group(1), Ring::Z()), 3, 0, 2);
  CHECK(groups(degs(h)) == "Z, 0, 0");
}

TEST_CASE("cohomology of cyclic groups") {
  auto G = cyclic_group(2);
  auto W = trivial_module(G, Ring::Z());
  auto h = ext_over_zg(W, 5, 0, 4, true);
  CHECK(groups(degs(h)) == "Z, 0, Z/2, 0, Z/2");
  for (auto& d : h.degrees) CHECK(d.status == Status::Proved);
  CHECK(groups(periodic_cyclic_cohomology(W, 0, 4)) == "Z, 0, Z/2, 0, Z/2");
  // u . u generates H^4
  bool found = false;
  for (auto& e : h.products)
    if (e.deg_a == 2 && e.deg_b == 2) {
      found = true;
      CHECK(e.coords.size() == 1);
      CHECK(e.coords[0] != 0);
    }
  CHECK(found);
  auto G3 = cyclic_group(3);
  auto h3 = ext_over_zg(trivial_module(G3, Ring::Z()), 5, 0, 4);
  CHECK(groups(degs(h3)) == groups(periodic_cyclic_cohomology(trivial_module(G3, Ring::Z()), 0, 4)));
  auto G6 = cyclic_group(6);
  auto c6 = conjugation_module(G6, Ring::Z());
  CHECK(groups(degs(ext_over_zg(c6, 4, 0, 3))) == groups(periodic_cyclic_cohomology(c6, 0, 3)));
}

TEST_CASE("symmetric group cohomology") {
  auto G = symmetric_group3();
  auto h = ext_over_zg(trivial_module(G, Ring::Z()), 5, 0, 4);
  CHECK(groups(degs(h)) == "Z, 0, Z/2, 0, Z/6");
  CHECK(G.classes().size() == 3);
}

TEST_CASE("group cochain product is associative and unital") {
  std::mt19937 g(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (auto G : {cyclic_group(3), symmetric_group3()}) {
    GroupCochains C(conjugation_module(G, Ring::Z()), 3, 0, 3);
    auto rnd = [&](int n) {
      Vec v(C.dim(n));
      for (auto& x : v) x = d(g);
      return v;
    };
    for (int t = 0; t < 3; ++t) {
      Vec a = rnd(1), b = rnd(1), c = rnd(1);
      CHECK(C.product(2, C.product(1, a, 1, b), 1, c) == C.product(1, a, 2, C.product(1, b, 1, c)));
      Vec one = zero_vec(C.dim(0));
      one[G.identity()] = 1;
      CHECK(C.product(0, one, 1, a) == a);
      CHECK(C.product(1, a, 0, one) == a);
      // Leibniz
      Vec lhs = C.differential(2).apply(C.product(1, a, 1, b));
      Vec r1 = C.product(2, C.differential(1).apply(a), 1, b);
      Vec r2 = C.product(1, a, 2, C.differential(1).apply(b));
      for (std::size_t i = 0; i < r1.size(); ++i) r1[i] -= r2[i];
      CHECK(lhs == r1);
    }
  }
}

TEST_CASE("corestriction after restriction is multiplication by the index") {
  auto G = symmetric_group3();
  std::vector<std::vector<int>> subs{{0}, {0, 1}, {0, 4, 5}, {0, 1, 2, 3, 4, 5}};
  for (auto& H : subs) {
    auto W = trivial_module(G, Ring::Z());
    GroupCochains CG(W, 5, 0, 5);
    GroupCochains CH(restrict_to(W, H), 5, 0, 5);
    auto cx = CG.complex();
    auto cxh = CH.complex();
    const long index = long(G.order() / H.size());
    for (int n = 1; n <= 4; ++n) {
      ClassReducer red(cx.diff(n - 1), cx.diff(n), cx.dim(n), Ring::Z());
      ClassReducer redh(cxh.diff(n - 1), cxh.diff(n), cxh.dim(n), Ring::Z());
      for (auto& z : red.generators()) {
        Vec r = restrict_cochain(CG, CH, n, z);
        CHECK(redh.is_cocycle(r));
        Vec c = corestrict_cochain(CG, CH, n, r);
        CHECK(red.is_cocycle(c));
        Vec diff = c;
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= index * z[i];
        CHECK(red.is_coboundary(diff));
      }
    }
  }
  CHECK_THROWS_AS(restrict_to(trivial_module(G, Ring::Z()), {0, 1, 4}), Error);
}

TEST_CASE("pull-push for cyclic groups and S3") {
  auto p = pullpush_hh_group_ring(cyclic_group(2), Ring::Z(), 5, 0, 4);
  CHECK(groups(p.total) == "Z^2, 0, Z/2 + Z/2, 0, Z/2 + Z/2");
  CHECK(p.has_products);
  auto t = pullpush_hh_group_ring(cyclic_group(1), Ring::Z(), 3, 0, 2);
  CHECK(groups(t.total) == "Z, 0, 0");
  auto s = pullpush_hh_group_ring(symmetric_group3(), Ring::Z(), 5, 0, 3);
  CHECK(groups(s.total) == "Z^3, 0, Z/2 + Z/6, 0");
}
