#include "hh/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hh/error.hpp"

namespace hh {

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices, std::vector<std::vector<int>> facets) {
  const int nv = int(vertices.size());
  if (nv == 0) throw Error(ErrorKind::InvalidComplex, "complex has no vertices");
  std::set<std::string> names(vertices.begin(), vertices.end());
  if (int(names.size()) != nv) throw Error(ErrorKind::InvalidComplex, "repeated vertex label");
  std::set<std::vector<int>> all;
  for (int v = 0; v < nv; ++v) all.insert({v});
  for (auto& f : facets) {
    if (f.empty()) throw Error(ErrorKind::InvalidComplex, "empty facet");
    std::sort(f.begin(), f.end());
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] < 0 || f[i] >= nv) throw Error(ErrorKind::InvalidComplex, "facet uses an unknown vertex");
      if (i > 0 && f[i] == f[i - 1]) throw Error(ErrorKind::InvalidComplex, "facet repeats vertex " + vertices[f[i]]);
    }
    if (f.size() > 20) throw Error(ErrorKind::CapExceeded, "facet dimension too large");
    const std::size_t m = f.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      all.insert(std::move(s));
    }
  }
  SimplicialComplex K;
  K.vertices_ = std::move(vertices);
  for (auto& s : all) {
    const std::size_t k = s.size() - 1;
    if (K.simplices_.size() <= k) K.simplices_.resize(k + 1);
    K.simplices_[k].push_back(s);
  }
  // maximal simplices: not a facet of any simplex one dimension up
  std::set<std::vector<int>> covered;
  for (std::size_t k = 1; k < K.simplices_.size(); ++k)
    for (auto& s : K.simplices_[k])
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto f = s;
        f.erase(f.begin() + long(i));
        covered.insert(std::move(f));
      }
  for (auto& dim : K.simplices_)
    for (auto& s : dim)
      if (!covered.count(s)) K.facets_.push_back(s);
  return K;
}

long SimplicialComplex::index(const std::vector<int>& s) const {
  if (s.empty() || int(s.size()) - 1 > dimension()) return -1;
  const auto& v = simplices_[s.size() - 1];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  return it != v.end() && *it == s ? long(it - v.begin()) : -1;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= dimension(); ++k) chi += (k % 2 ? -1 : 1) * long(count(k));
  return chi;
}

std::string SimplicialComplex::label(const std::vector<int>& s) const {
  if (s.size() == 1) return vertices_[s[0]];
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + vertices_[s[i]];
  return out + "]";
}

CochainComplex simplicial_cochains(const SimplicialComplex& K, Ring r) {
  CochainComplex c;
  c.ring = r;
  c.lo = 0;
  for (int k = 0; k <= K.dimension(); ++k) c.dims.push_back(K.count(k));
  for (int k = 0; k < K.dimension(); ++k) {
    MatrixBuilder b(K.count(k + 1), K.count(k), r);
    const auto& up = K.simplices(k + 1);
    for (std::size_t t = 0; t < up.size(); ++t)
      for (std::size_t i = 0; i < up[t].size(); ++i) {
        auto f = up[t];
        f.erase(f.begin() + long(i));
        b.add(t, std::size_t(K.index(f)), Rat(i % 2 ? -1 : 1));
      }
    c.d.push_back(b.build());
  }
  return c;
}

namespace {

struct Flat {
  std::vector<std::vector<int>> simplex;
  std::map<std::vector<int>, std::uint32_t> pos;
};

Flat flatten(const SimplicialComplex& K) {
  Flat f;
  for (int k = 0; k <= K.dimension(); ++k)
    for (auto& s : K.simplices(k)) {
      f.pos[s] = std::uint32_t(f.simplex.size());
      f.simplex.push_back(s);
    }
  return f;
}

// parity of the permutation sorting v
int sort_sign(std::vector<int>& v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) s = -s;
  std::sort(v.begin(), v.end());
  return s;
}

std::string unit_label(const SimplicialComplex& K) {
  for (auto& v : K.vertices())
    if (v == "1") return "one";
  return "1";
}

}  // namespace

FiniteDgAlgebra cochain_algebra(const SimplicialComplex& K, Ring r) {
  Flat f = flatten(K);
  const std::size_t n = f.simplex.size();
  FiniteDgAlgebra a;
  a.ring = r;
  for (auto& s : f.simplex) a.basis.push_back({K.label(s), int(s.size()) - 1});
  a.init_tables();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = f.simplex[i];
    for (std::size_t j = 0; j < n; ++j) {
      const auto& t = f.simplex[j];
      if (s.back() != t.front()) continue;
      std::vector<int> u = s;
      u.insert(u.end(), t.begin() + 1, t.end());
      auto it = f.pos.find(u);
      if (it != f.pos.end()) a.set_product(i, j, {{it->second, Rat(1)}});
    }
    LinComb d;
    for (std::uint32_t t = 0; t < n; ++t) {
      const auto& up = f.simplex[t];
      if (up.size() != s.size() + 1) continue;
      for (std::size_t k = 0; k < up.size(); ++k) {
        auto face = up;
        face.erase(face.begin() + long(k));
        if (face == s) d.push_back({t, Rat(k % 2 ? -1 : 1)});
      }
    }
    a.set_diff(i, d);
  }
  Vec u = zero_vec(n);
  for (std::size_t v = 0; v < K.count(0); ++v) u[v] = 1;
  return lexicographic_order(split_unit(a, u, unit_label(K)));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& K) {
  Flat f = flatten(K);
  std::vector<std::string> labels;
  for (auto& s : f.simplex) labels.push_back(K.label(s));
  std::vector<std::vector<int>> facets;
  for (auto F : K.facets()) {
    std::sort(F.begin(), F.end());
    do {
      std::vector<int> chain, face;
      for (int v : F) {
        face.push_back(v);
        auto sorted = face;
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(int(f.pos.at(sorted)));
      }
      facets.push_back(std::move(chain));
    } while (std::next_permutation(F.begin(), F.end()));
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

std::vector<int> SimplicialAction::apply(int g, const std::vector<int>& s) const {
  std::vector<int> out;
  for (int v : s) out.push_back(perm[g][v]);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialAction simplicial_action(const SimplicialComplex& K, const FiniteGroupData& G,
                                   std::vector<std::vector<int>> perm) {
  const std::size_t nv = K.count(0);
  if (perm.size() != G.order()) throw Error(ErrorKind::InvalidAction, "need one permutation per group element");
  for (auto& p : perm) {
    if (p.size() != nv) throw Error(ErrorKind::InvalidAction, "permutation has the wrong length");
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    for (std::size_t v = 0; v < nv; ++v)
      if (q[v] != int(v)) throw Error(ErrorKind::InvalidAction, "vertex map is not a permutation");
  }
  for (std::size_t g = 0; g < G.order(); ++g)
    for (std::size_t h = 0; h < G.order(); ++h)
      for (std::size_t v = 0; v < nv; ++v)
        if (perm[G.mul(int(g), int(h))][v] != perm[g][perm[h][v]])
          throw Error(ErrorKind::InvalidAction,
                      "permutations of " + G.labels()[g] + " and " + G.labels()[h] + " do not compose");
  SimplicialAction act{G, std::move(perm)};
  for (std::size_t g = 0; g < G.order(); ++g)
    for (int k = 0; k <= K.dimension(); ++k)
      for (auto& s : K.simplices(k))
        if (K.index(act.apply(int(g), s)) < 0)
          throw Error(ErrorKind::NotSimplicial, G.labels()[g] + " sends " + K.label(s) + " to a non-simplex");
  return act;
}

SimplicialAction subdivided_action(const SimplicialComplex& K, const SimplicialAction& act) {
  Flat f = flatten(K);
  SimplicialAction out{act.group, {}};
  for (std::size_t g = 0; g < act.group.order(); ++g) {
    std::vector<int> p(f.simplex.size());
    for (std::size_t i = 0; i < f.simplex.size(); ++i) p[i] = int(f.pos.at(act.apply(int(g), f.simplex[i])));
    out.perm.push_back(std::move(p));
  }
  return out;
}

InducedAction induced_action(const SimplicialComplex& K, const FiniteGroupData& G, std::vector<std::vector<int>> perm,
                             Ring r) {
  InducedAction out;
  out.simplicial = simplicial_action(K, G, std::move(perm));
  FiniteDgAlgebra B = cochain_algebra(K, r);
  Flat f = flatten(K);
  // final basis index of every simplex; the first vertex was replaced by the unit
  std::vector<long> at(f.simplex.size(), -1);
  std::vector<std::vector<int>> of(B.dim());
  for (std::size_t i = 0; i < f.simplex.size(); ++i) {
    auto j = B.index_of(K.label(f.simplex[i]));
    if (i == 0) continue;
    at[i] = long(*j);
    of[*j] = f.simplex[i];
  }
  out.algebra.group = G;
  for (std::size_t g = 0; g < G.order(); ++g) {
    MatrixBuilder b(B.dim(), B.dim(), r);
    for (std::size_t j = 0; j < B.dim(); ++j) {
      Vec v = zero_vec(f.simplex.size());
      if (j == B.unit) {
        for (std::size_t w = 0; w < K.count(0); ++w) v[f.pos.at({out.simplicial.perm[g][w]})] += 1;
      } else {
        std::vector<int> img;
        for (int x : of[j]) img.push_back(out.simplicial.perm[g][x]);
        int s = sort_sign(img);
        v[f.pos.at(img)] += s;
      }
      // e_first = 1 - (other vertices)
      Rat c0 = v[0];
      if (c0 != 0) b.add(B.unit, j, c0);
      for (std::size_t i = 1; i < f.simplex.size(); ++i) {
        Rat x = f.simplex[i].size() == 1 ? v[i] - c0 : v[i];
        if (x != 0) b.add(std::size_t(at[i]), j, x);
      }
    }
    out.algebra.sigma.push_back(b.build());
  }
  out.report = validate_action(B, out.algebra);
  return out;
}

SimplicialComplex quotient_complex(const SimplicialComplex& K, const SimplicialAction& act) {
  const auto& G = act.group;
  const std::size_t nv = K.count(0);
  if (act.perm.size() != G.order() || (nv && act.perm[0].size() != nv))
    throw Error(ErrorKind::InvalidAction, "action does not match the complex");
  std::vector<int> orbit(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    int m = int(v);
    for (std::size_t g = 0; g < G.order(); ++g) m = std::min(m, act.perm[g][v]);
    orbit[v] = m;
  }
  std::vector<int> reps;
  std::map<int, int> qv;
  for (std::size_t v = 0; v < nv; ++v)
    if (orbit[v] == int(v)) {
      qv[int(v)] = int(reps.size());
      reps.push_back(int(v));
    }
  std::map<std::vector<int>, std::vector<int>> seen;  // vertex orbit set -> simplex orbit representative
  for (int k = 0; k <= K.dimension(); ++k)
    for (auto& s : K.simplices(k)) {
      std::vector<int> rep = s;
      for (std::size_t g = 0; g < G.order(); ++g) {
        auto img = act.apply(int(g), s);
        if (int(g) != G.identity() && img == s)
          throw Error(ErrorKind::NotFree, G.labels()[g] + " fixes " + K.label(s));
        rep = std::min(rep, img);
      }
      std::vector<int> os;
      for (int v : s) os.push_back(qv.at(orbit[v]));
      std::sort(os.begin(), os.end());
      if (std::adjacent_find(os.begin(), os.end()) != os.end())
        throw Error(ErrorKind::OrbitCollision,
                    K.label(s) + " has two vertices in one orbit; subdivide (barycentric_subdivision) first");
      auto [it, fresh] = seen.emplace(os, rep);
      if (!fresh && it->second != rep)
        throw Error(ErrorKind::OrbitCollision, K.label(s) + " and " + K.label(it->second) +
                                                   " have the same vertex orbits; subdivide (barycentric_subdivision) first");
    }
  std::vector<std::string> labels;
  for (int v : reps) labels.push_back(K.vertices()[v]);
  std::vector<std::vector<int>> facets;
  for (auto& F : K.facets()) {
    std::vector<int> os;
    for (int v : F) os.push_back(qv.at(orbit[v]));
    facets.push_back(std::move(os));
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

}  // namespace hh
