#include <doctest.h>

#include "hh/error.hpp"
#include "hh/simplicial.hpp"

using namespace hh;

namespace {

// cycle v0 v1 .. v5, listed so that the half turn keeps the order on every edge
SimplicialComplex hexagon() {
  std::vector<std::string> names{"v2", "v5", "v0", "v3", "v1", "v4"};
  auto at = [&](int i) { return int(std::find(names.begin(), names.end(), "v" + std::to_string(i % 6)) - names.begin()); };
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < 6; ++i) edges.push_back({at(i), at(i + 1)});
  return SimplicialComplex::from_facets(names, edges);
}

// rotation of the cycle by k steps as a permutation of vertex indices
std::vector<int> rotation(const SimplicialComplex& K, int k) {
  std::vector<int> p(6);
  for (int v = 0; v < 6; ++v) {
    int i = std::stoi(K.vertices()[v].substr(1));
    std::string target = "v" + std::to_string((i + k) % 6);
    p[v] = int(std::find(K.vertices().begin(), K.vertices().end(), target) - K.vertices().begin());
  }
  return p;
}

SimplicialComplex octahedron() {
  std::vector<std::vector<int>> faces;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) faces.push_back({a, b, c});
  return SimplicialComplex::from_facets({"+x", "-x", "+y", "-y", "+z", "-z"}, faces);
}

std::vector<std::vector<int>> antipodal() { return {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}}; }

std::string groups(const SimplicialComplex& K, Ring r) {
  std::string s;
  for (auto& d : complex_cohomology(simplicial_cochains(K, r), false)) s += (s.empty() ? "" : ", ") + d.group_string(r);
  return s;
}

}  // namespace

TEST_CASE("cochain algebras of small complexes") {
  auto point = SimplicialComplex::from_facets({"p"}, {});
  auto a = cochain_algebra(point, Ring::Z());
  CHECK(a.dim() == 1);
  CHECK(a.deg(0) == 0);
  CHECK(validate_algebra(a).ok);

  auto h = hexagon();
  CHECK(h.count(0) == 6);
  CHECK(h.count(1) == 6);
  CHECK(groups(h, Ring::Z()) == "Z, Z");
  CHECK(validate_algebra(cochain_algebra(h, Ring::Z())).ok);

  auto o = octahedron();
  CHECK(groups(o, Ring::Z()) == "Z, 0, Z");
  CHECK(o.euler_characteristic() == 2);
  auto ao = cochain_algebra(o, Ring::Z());
  CHECK(ao.dim() == 26);
  CHECK(validate_algebra(ao).ok);
}

TEST_CASE("invalid complexes are rejected") {
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "b"}, {{0, 0}}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "b"}, {{0, 2}}), Error);
  CHECK_THROWS_AS(SimplicialComplex::from_facets({"a", "a"}, {}), Error);
}

TEST_CASE("barycentric subdivision") {
  auto edge = SimplicialComplex::from_facets({"a", "b"}, {{0, 1}});
  auto se = barycentric_subdivision(edge);
  CHECK(se.count(0) == 3);
  CHECK(se.count(1) == 2);
  auto tri = SimplicialComplex::from_facets({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  auto st = barycentric_subdivision(tri);
  CHECK(st.count(0) == 6);
  CHECK(st.count(1) == 6);
  CHECK(groups(st, Ring::Z()) == "Z, Z");
  auto so = barycentric_subdivision(octahedron());
  CHECK(so.euler_characteristic() == 2);
  CHECK(groups(so, Ring::Z()) == "Z, 0, Z");
  CHECK(validate_algebra(cochain_algebra(so, Ring::Z())).ok);
}

TEST_CASE("induced actions of the hexagon") {
  auto h = hexagon();
  auto ind = induced_action(h, cyclic_group(2), {rotation(h, 0), rotation(h, 3)}, Ring::Z());
  CHECK(ind.report.ok);
  auto id = induced_action(h, cyclic_group(1), {rotation(h, 0)}, Ring::Z());
  CHECK(id.report.ok);
  CHECK(id.algebra.sigma[0] == ExactMatrix::identity(12, Ring::Z()));

  auto Z6 = cyclic_group(6);
  std::vector<std::vector<int>> rot;
  for (int k = 0; k < 6; ++k) rot.push_back(rotation(h, k));
  auto full = simplicial_action(h, Z6, rot);
  int half = -1;
  for (int g = 0; g < 6; ++g)
    if (Z6.element_order(g) == 2) half = g;
  CHECK(full.perm[half] == rotation(h, 3));

  std::vector<std::vector<int>> bad{rotation(h, 0), {0, 1, 2, 3, 5, 4}};
  CHECK_THROWS_AS(simplicial_action(h, cyclic_group(2), bad), Error);
}

TEST_CASE("quotients by free actions") {
  auto h = hexagon();
  auto act = simplicial_action(h, cyclic_group(2), {rotation(h, 0), rotation(h, 3)});
  auto q = quotient_complex(h, act);
  CHECK(q.count(0) == 3);
  CHECK(q.count(1) == 3);
  CHECK(groups(q, Ring::Q()) == "Q, Q");

  auto same = quotient_complex(h, simplicial_action(h, cyclic_group(1), {rotation(h, 0)}));
  CHECK(same == h);

  auto o = octahedron();
  auto anti = simplicial_action(o, cyclic_group(2), antipodal());
  try {
    quotient_complex(o, anti);
    FAIL("expected an orbit collision");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrbitCollision);
  }
  auto so = barycentric_subdivision(o);
  auto rp2 = quotient_complex(so, subdivided_action(o, anti));
  CHECK(rp2.euler_characteristic() == 1);
  CHECK(groups(rp2, Ring::Q()) == "Q, 0, 0");
  CHECK(groups(rp2, Ring::Z()) == "Z, 0, Z/2");
  auto ind = induced_action(so, cyclic_group(2), subdivided_action(o, anti).perm, Ring::Q());
  CHECK(ind.report.ok);

  auto fixed = simplicial_action(o, cyclic_group(2), {{0, 1, 2, 3, 4, 5}, {1, 0, 2, 3, 4, 5}});
  try {
    quotient_complex(o, fixed);
    FAIL("expected a fixed simplex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFree);
  }
}
