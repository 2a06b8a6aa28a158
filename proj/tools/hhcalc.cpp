#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "hh/equivhh.hpp"
#include "hh/error.hpp"
#include "hh/io.hpp"
#include "hh/simplicial.hpp"
#include "oracle.hpp"
#include "suite.hpp"

using namespace hh;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "hhcalc.report/1";
constexpr const char* kVersion = "0.1.0";

struct Job {
  std::string command;
  std::vector<std::string> inputs;
  std::string ring;
  int bar_truncation = -1, group_truncation = -1;
  std::string degrees;
  std::string format = "text";
  bool oracle = false, products = false;
  int cap = 6;
  std::string fixtures = HH_FIXTURE_DIR;
};

// Errors in the input are exit status 2 wherever they surface.
bool input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::ValidationError:
    case ErrorKind::InvalidRing:
    case ErrorKind::InvalidComplex:
    case ErrorKind::InvalidAction:
    case ErrorKind::NotSimplicial:
    case ErrorKind::UnitNotSplit:
    case ErrorKind::NotASubgroup: return true;
    default: return false;
  }
}

struct Inputs {
  std::optional<FiniteDgAlgebra> algebra;
  std::optional<FiniteGroupData> group;
  std::optional<io::ActionDocument> action;
  std::optional<SimplicialComplex> complex;
  std::optional<io::Scenario> scenario;
};

template <class T>
void set_once(std::optional<T>& slot, T value, const std::string& kind, const std::string& path) {
  if (slot) throw Error(ErrorKind::ParseError, path + ": more than one " + kind + " given");
  slot = std::move(value);
}

Inputs load(const std::vector<std::string>& paths) {
  Inputs in;
  for (auto& p : paths) {
    std::string text = io::read_file(p);
    std::string dir = io::directory_of(p);
    auto where = [&](const Error& e) {
      std::string m = e.what();
      return Error(e.kind(), p + ": " + m.substr(std::string(error_name(e.kind())).size() + 2));
    };
    try {
      std::string type = io::document_type(text);
      if (type == "algebra") set_once(in.algebra, io::parse_algebra(text), type, p);
      if (type == "group") set_once(in.group, io::parse_group(text), type, p);
      if (type == "action") set_once(in.action, io::parse_action(text, dir), type, p);
      if (type == "complex") set_once(in.complex, io::parse_complex(text), type, p);
      if (type == "scenario") set_once(in.scenario, io::parse_scenario(text, dir), type, p);
    } catch (const Error& e) {
      throw where(e);
    }
  }
  return in;
}

struct Settings {
  Ring ring;
  int NA = 3, NG = 3, lo = 0, hi = 3;
  bool ring_given = false;
};

void parse_window(const std::string& s, int& lo, int& hi) {
  auto p = s.find("..");
  std::size_t a = 0, b = 0;
  try {
    if (p == std::string::npos) throw 0;
    lo = std::stoi(s.substr(0, p), &a);
    hi = std::stoi(s.substr(p + 2), &b);
  } catch (...) {
    throw Error(ErrorKind::ParseError, "--degrees: expected lo..hi, found '" + s + "'");
  }
  if (a != p || b != s.size() - p - 2) throw Error(ErrorKind::ParseError, "--degrees: expected lo..hi, found '" + s + "'");
  if (lo > hi) throw Error(ErrorKind::ParseError, "--degrees: empty window '" + s + "'");
}

Settings settle(const Job& job, const Inputs& in) {
  Settings s;
  const io::Scenario* sc = in.scenario ? &*in.scenario : nullptr;
  if (!job.ring.empty()) {
    s.ring = Ring::parse(job.ring);
    s.ring_given = true;
  } else if (in.algebra) {
    s.ring = in.algebra->ring;
  } else if (in.action) {
    s.ring = in.action->algebra.ring;
  } else if (sc && !sc->ring.empty()) {
    s.ring = Ring::parse(sc->ring);
  } else {
    s.ring = Ring::Z();
  }
  if (!job.degrees.empty())
    parse_window(job.degrees, s.lo, s.hi);
  else if (sc && sc->has_degrees) {
    s.lo = sc->lo;
    s.hi = sc->hi;
  }
  s.NA = job.bar_truncation >= 0 ? job.bar_truncation : (sc && sc->bar_truncation >= 0 ? sc->bar_truncation : 3);
  s.NG = job.group_truncation >= 0 ? job.group_truncation
                                   : (sc && sc->group_truncation >= 0 ? sc->group_truncation
                                                                      : std::min(job.cap, std::max(1, s.hi + 1)));
  if (job.cap < 0) throw Error(ErrorKind::ParseError, "--cap must be nonnegative");
  if (s.NA > job.cap) throw Error(ErrorKind::CapExceeded, "bar truncation " + std::to_string(s.NA) + " exceeds the cap " + std::to_string(job.cap));
  if (s.NG > job.cap) throw Error(ErrorKind::CapExceeded, "group truncation " + std::to_string(s.NG) + " exceeds the cap " + std::to_string(job.cap));
  return s;
}

// ---- resolving inputs ----------------------------------------------------

FiniteDgAlgebra in_ring(const FiniteDgAlgebra& a, const Settings& s) { return s.ring_given ? io::change_ring(a, s.ring) : a; }

FiniteDgAlgebra need_algebra(const Inputs& in, const Settings& s) {
  if (in.algebra) return in_ring(*in.algebra, s);
  if (in.action) return in_ring(in.action->algebra, s);
  if (in.scenario) return cochain_algebra(in.scenario->complex, s.ring);
  if (in.complex) return cochain_algebra(*in.complex, s.ring);
  throw Error(ErrorKind::ParseError, "no algebra among the inputs");
}

FiniteGroupData need_group(const Inputs& in) {
  if (in.group) return *in.group;
  if (in.action) return in.action->action.group;
  if (in.scenario) return in.scenario->group;
  throw Error(ErrorKind::ParseError, "no group among the inputs");
}

std::pair<FiniteDgAlgebra, AlgebraAction> need_action(const Inputs& in, const Settings& s) {
  if (in.action) {
    auto act = s.ring_given ? io::change_ring(in.action->action, s.ring) : in.action->action;
    return {in_ring(in.action->algebra, s), act};
  }
  if (in.scenario) {
    auto ind = induced_action(in.scenario->complex, in.scenario->group, in.scenario->permutations, s.ring);
    if (!ind.report.ok) throw Error(ErrorKind::InvalidAction, "induced action " + ind.report.message());
    return {cochain_algebra(in.scenario->complex, s.ring), ind.algebra};
  }
  if (in.algebra && in.group) {
    auto A = in_ring(*in.algebra, s);
    return {A, trivial_action(*in.group, A)};
  }
  throw Error(ErrorKind::ParseError, "expected an action, a scenario, or an algebra and a group");
}

std::pair<SimplicialComplex, std::optional<SimplicialAction>> need_complex(const Inputs& in) {
  if (in.scenario)
    return {in.scenario->complex, simplicial_action(in.scenario->complex, in.scenario->group, in.scenario->permutations)};
  if (in.complex) return {*in.complex, std::nullopt};
  throw Error(ErrorKind::ParseError, "no simplicial complex among the inputs");
}

// ---- report --------------------------------------------------------------

json torsion_json(const std::vector<Int>& t) {
  json a = json::array();
  for (auto& x : t) a.push_back(x.get_str());
  return a;
}

json degree_json(const DegreeCohomology& d, const Ring& r) {
  return json{{"degree", d.degree},       {"dim", d.dim},     {"rank", d.rank},
              {"torsion", torsion_json(d.torsion)}, {"group", d.group_string(r)}, {"status", status_name(d.status)}};
}

json degrees_json(const std::vector<DegreeCohomology>& ds, const Ring& r) {
  json a = json::array();
  for (auto& d : ds) a.push_back(degree_json(d, r));
  return a;
}

std::string gen_label(int deg, std::size_t i) { return "g" + std::to_string(deg) + "." + std::to_string(i); }

json products_json(const std::vector<ProductEntry>& ps) {
  json a = json::array();
  for (auto& p : ps) {
    json c = json::array();
    for (auto& x : p.coords) c.push_back(x.get_str());
    a.push_back(json{{"a", gen_label(p.deg_a, p.a)}, {"b", gen_label(p.deg_b, p.b)},
                     {"degree", p.deg_a + p.deg_b}, {"coordinates", c}});
  }
  return a;
}

struct Report {
  json j;
  bool oracle_failed = false;
};

Report new_report(const Job& job, const Settings& s, bool bar, bool group) {
  Report r;
  r.j["schema"] = kSchema;
  r.j["command"] = job.command;
  json p;
  p["tool"] = "hhcalc";
  p["version"] = kVersion;
  p["ring"] = s.ring.name();
  p["bar_truncation"] = bar ? json(s.NA) : json(nullptr);
  p["group_truncation"] = group ? json(s.NG) : json(nullptr);
  p["degrees"] = json::array({s.lo, s.hi});
  p["inputs"] = job.inputs;
  r.j["provenance"] = p;
  return r;
}

void oracle_result(Report& r, const std::string& method, bool agree, const std::string& detail) {
  r.j["oracle"] = json{{"method", method}, {"agree", agree}, {"detail", detail}};
  if (!agree) r.oracle_failed = true;
}

// compare two per-degree tables where both are settled
std::pair<bool, std::string> agree_settled(const std::vector<DegreeCohomology>& a, const std::vector<DegreeCohomology>& b,
                                           const Ring& ring) {
  int compared = 0;
  for (auto& x : a)
    for (auto& y : b) {
      if (x.degree != y.degree) continue;
      auto ok = [](Status s) { return s == Status::Proved || s == Status::Certified; };
      if (!ok(x.status) || !ok(y.status)) continue;
      ++compared;
      if (!x.same_group(y))
        return {false, "degree " + std::to_string(x.degree) + ": " + x.group_string(ring) + " vs " + y.group_string(ring)};
    }
  return {true, std::to_string(compared) + " settled degrees compared"};
}

// ---- commands ------------------------------------------------------------

Report cmd_hh(const Job& job, const Inputs& in, const Settings& s, bool homology) {
  auto A = need_algebra(in, s);
  auto M = regular_bimodule(A);
  Report r = new_report(job, s, true, false);
  auto res = homology ? hochschild_homology(A, M, s.NA, s.lo, s.hi) : hochschild_cohomology(A, M, s.NA, s.lo, s.hi);
  r.j["degrees"] = degrees_json(res.degrees, A.ring);
  if (job.products && !homology) {
    HochschildSpace sp(A, M, s.NA, s.lo - 1, s.hi + 1);
    auto mul = [&](int a, const Vec& x, int b, const Vec& y) {
      auto p = cup_product(A, cochain_from_vector(sp, a, x), cochain_from_vector(sp, b, y));
      return cochain_to_vector(sp, a + b, p);
    };
    r.j["products"] = products_json(product_table(sp.complex(), s.lo, s.hi, mul));
  }
  if (job.oracle) {
    if (!homology) {
      HochschildSpace sp(A, M, s.NA, s.lo - 1, s.hi + 1);
      std::size_t total = 0;
      for (int n = s.lo - 1; n <= s.hi + 1; ++n) total += sp.dim(n);
      if (total > 4000) throw Error(ErrorKind::CapExceeded, "the dense oracle is limited to 4000 cochains, need " + std::to_string(total));
      std::size_t entries = 0;
      auto err = verify::compare(sp, verify::naive_cochain_complex(A, M, s.NA, s.lo - 1, s.hi + 1), &entries);
      oracle_result(r, "dense brute-force cochain complex", err.empty(),
                    err.empty() ? std::to_string(entries) + " matrix entries equal" : err);
    } else {
      auto co = hochschild_cohomology(A, dual_bimodule(A, M), s.NA, -s.hi, -s.lo);
      std::string bad;
      for (auto& d : res.degrees) {
        auto e = co.at(-d.degree);
        if (e->rank != d.rank && bad.empty())
          bad = "degree " + std::to_string(d.degree) + ": rank " + std::to_string(d.rank) + " vs " + std::to_string(e->rank);
      }
      oracle_result(r, "cochains with dual coefficients (ranks)", bad.empty(), bad.empty() ? "all ranks equal" : bad);
    }
  }
  return r;
}

// Hom_ZG of the homogeneous bar resolution into the trivial module: functions on diagonal orbits of tuples.
std::vector<DegreeCohomology> homogeneous_cohomology(const FiniteGroupData& G, const Ring& r, int N, int lo, int hi) {
  auto res = group_bar_resolution(G, N + 1, true);
  CochainComplex c;
  c.ring = r;
  c.lo = -1;
  c.dims.push_back(0);
  std::vector<std::vector<long>> orbit(N + 2);
  std::vector<std::size_t> count(N + 2);
  for (int k = 0; k <= N + 1; ++k) {
    std::map<std::vector<int>, long> id;
    for (std::size_t i = 0; i < res.basis[k].size(); ++i) {
      auto t = res.basis[k][i];
      // canonical representative: translate so that the first entry is e
      auto g = G.inv(t[0]);
      for (auto& x : t) x = G.mul(g, x);
      auto [it, fresh] = id.emplace(t, long(id.size()));
      orbit[k].push_back(it->second);
    }
    count[k] = id.size();
    c.dims.push_back(count[k]);
  }
  c.d.push_back(ExactMatrix(count[0], 0, r));
  for (int k = 0; k <= N; ++k) {
    // (delta f)(o') = f(boundary of a representative of o')
    MatrixBuilder b(count[k + 1], count[k], r);
    std::vector<bool> done(count[k + 1]);
    auto T = res.boundary[k].transpose();  // rows: tuples of degree k + 1
    for (std::size_t t = 0; t < T.rows(); ++t) {
      long o = orbit[k + 1][t];
      if (done[o]) continue;
      done[o] = true;
      for (auto& [col, v] : T.row(t)) b.add(o, orbit[k][col], v);
    }
    c.d.push_back(b.build());
  }
  auto all = complex_cohomology(c);
  std::vector<DegreeCohomology> out;
  for (auto& d : all)
    if (d.degree >= lo && d.degree <= hi) out.push_back(d);
  return out;
}

Report cmd_groupcoh(const Job& job, const Inputs& in, const Settings& s) {
  auto G = need_group(in);
  Report r = new_report(job, s, false, true);
  auto res = ext_over_zg(trivial_module(G, s.ring), s.NG, s.lo, s.hi, job.products);
  r.j["degrees"] = degrees_json(res.degrees, s.ring);
  if (job.products) r.j["products"] = products_json(res.products);
  if (job.oracle) {
    bool cyclic = false;
    for (std::size_t g = 0; g < G.order(); ++g) cyclic |= std::size_t(G.element_order(int(g))) == G.order();
    std::vector<DegreeCohomology> ref;
    std::string method;
    if (cyclic) {
      ref = periodic_cyclic_cohomology(trivial_module(G, s.ring), s.lo, s.hi);
      method = "period-2 resolution";
    } else {
      ref = homogeneous_cohomology(G, s.ring, s.NG, s.lo, s.hi);
      method = "homogeneous bar resolution";
    }
    auto [ok, det] = agree_settled(res.degrees, ref, s.ring);
    oracle_result(r, method, ok, det);
  }
  return r;
}

Report cmd_pullpush(const Job& job, const Inputs& in, const Settings& s) {
  auto G = need_group(in);
  Report r = new_report(job, s, false, true);
  auto pp = pullpush_hh_group_ring(G, s.ring, s.NG, s.lo, s.hi);
  r.j["degrees"] = degrees_json(pp.total, s.ring);
  json sum = json::array();
  for (std::size_t i = 0; i < pp.summands.size(); ++i)
    sum.push_back(json{{"representative", G.labels()[pp.representatives[i]]},
                       {"degrees", degrees_json(pp.summands[i].degrees, s.ring)}});
  r.j["summands"] = sum;
  if (job.products) {
    if (pp.has_products)
      r.j["products"] = products_json(pp.products);
    else
      r.j["products"] = nullptr;
  }
  if (job.oracle) {
    auto A = ground_algebra(s.ring);
    auto d = hh_smash(A, trivial_action(G, A), s.NG, 0, s.lo, s.hi);
    auto [ok, det] = agree_settled(pp.total, d.degrees, s.ring);
    oracle_result(r, "double complex for the group ring", ok, det);
  }
  return r;
}

Report cmd_smash(const Job& job, const Inputs& in, const Settings& s) {
  auto [A, act] = need_action(in, s);
  Report r = new_report(job, s, true, true);
  auto res = hh_smash(A, act, s.NG, s.NA, s.lo, s.hi, job.products);
  r.j["group"] = act.group.labels();
  r.j["degrees"] = degrees_json(res.degrees, A.ring);
  if (job.products) r.j["products"] = products_json(res.products);
  if (job.oracle) {
    auto S = smash_product(A, act);
    auto direct = hochschild_cohomology(S.algebra, regular_bimodule(S.algebra), s.NA, s.lo, s.hi);
    auto [ok, det] = agree_settled(res.degrees, direct.degrees, A.ring);
    std::string method = "bar complex of A#G";
    if (ok && A.dim() == 1) {
      auto pp = pullpush_hh_group_ring(act.group, A.ring, s.NG, s.lo, s.hi);
      auto [ok2, det2] = agree_settled(res.degrees, pp.total, A.ring);
      ok = ok2;
      det += "; pull-push: " + det2;
      method += " and pull-push";
    }
    oracle_result(r, method, ok, det);
  }
  return r;
}

Report cmd_split(const Job& job, const Inputs& in, const Settings& s) {
  auto [A, act] = need_action(in, s);
  Report r = new_report(job, s, true, true);
  auto cs = conjugacy_split(A, act, s.NG, s.NA, s.lo, s.hi);
  const auto& G = act.group;
  json sum = json::array();
  for (auto& x : cs.summands) {
    json cent = json::array();
    for (int h : x.centralizer) cent.push_back(G.labels()[h]);
    sum.push_back(json{{"representative", G.labels()[x.representative]},
                       {"centralizer", cent},
                       {"degrees", degrees_json(x.result.degrees, A.ring)}});
  }
  r.j["summands"] = sum;
  r.j["degrees"] = degrees_json(cs.total, A.ring);
  if (job.oracle) {
    auto d = hh_smash(A, act, s.NG, s.NA, s.lo, s.hi);
    auto [ok, det] = agree_settled(cs.total, d.degrees, A.ring);
    oracle_result(r, "double complex for A#G", ok, det);
  }
  return r;
}

json entries_json(const std::vector<SpectralEntry>& es, const Ring& r) {
  json a = json::array();
  for (auto& e : es) {
    json x{{"p", e.p}, {"q", e.q}, {"available", e.available}};
    if (e.available) {
      x["rank"] = e.group.rank;
      x["torsion"] = torsion_json(e.group.torsion);
      x["group"] = e.group.group_string(r);
    }
    a.push_back(x);
  }
  return a;
}

Report cmd_spectral(const Job& job, const Inputs& in, const Settings& s) {
  auto [A, act] = need_action(in, s);
  Report r = new_report(job, s, true, true);
  auto pages = spectral_pages(A, act, s.NG, s.NA, s.lo, s.hi);
  auto total = hh_smash(A, act, s.NG, s.NA, s.lo, s.hi);
  r.j["e1"] = entries_json(pages.e1, A.ring);
  r.j["e2"] = entries_json(pages.e2, A.ring);
  r.j["degrees"] = degrees_json(total.degrees, A.ring);
  if (job.oracle) {
    std::string bad;
    if (!A.ring.is_field()) throw Error(ErrorKind::InvalidRing, "the collapse check needs a field");
    for (auto& e : pages.e2) {
      if (!bad.empty()) break;
      if (e.p > 0 && e.p < s.NG && e.group.rank) bad = "E2(" + std::to_string(e.p) + "," + std::to_string(e.q) + ") != 0";
      if (e.p == 0 && !e.group.same_group(*total.at(e.q)))
        bad = "E2(0," + std::to_string(e.q) + ") differs from the total";
    }
    oracle_result(r, "collapse to column 0", bad.empty(), bad.empty() ? "E2 is concentrated in column 0" : bad);
  }
  return r;
}

std::vector<DegreeCohomology> simplicial_groups(const SimplicialComplex& K, const Ring& ring) {
  auto c = simplicial_cochains(K, ring);
  // pad with zero spaces so that every degree is interior
  CochainComplex p;
  p.ring = ring;
  p.lo = -1;
  p.dims.push_back(0);
  p.d.push_back(ExactMatrix(c.dim(0), 0, ring));
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    p.dims.push_back(c.dims[i]);
    if (i < c.d.size()) p.d.push_back(c.d[i]);
  }
  p.d.push_back(ExactMatrix(0, c.dims.back(), ring));
  p.dims.push_back(0);
  auto all = complex_cohomology(p);
  return std::vector<DegreeCohomology>(all.begin() + 1, all.end() - 1);
}

Report cmd_simplicial(const Job& job, const Inputs& in, const Settings& s) {
  auto [K, act] = need_complex(in);
  Report r = new_report(job, s, false, false);
  r.j["provenance"]["degrees"] = json::array({0, K.dimension()});
  auto B = cochain_algebra(K, s.ring);
  r.j["algebra"] = json::parse(io::serialize(B));
  r.j["degrees"] = degrees_json(simplicial_groups(K, s.ring), s.ring);
  if (job.oracle) {
    auto rep = validate_algebra(B);
    oracle_result(r, "dg-algebra axioms", rep.ok, rep.message());
  }
  return r;
}

Report cmd_quotient(const Job& job, const Inputs& in, const Settings& s) {
  auto [K, act] = need_complex(in);
  if (!act) throw Error(ErrorKind::ParseError, "quotient needs a scenario with a group action");
  Report r = new_report(job, s, true, false);
  auto Q = quotient_complex(K, *act);
  r.j["complex"] = json::parse(io::serialize(Q));
  r.j["simplicial"] = degrees_json(simplicial_groups(Q, s.ring), s.ring);
  auto CQ = cochain_algebra(Q, s.ring);
  auto hh = hochschild_cohomology(CQ, regular_bimodule(CQ), s.NA, s.lo, s.hi);
  r.j["degrees"] = degrees_json(hh.degrees, s.ring);
  if (job.oracle) {
    long chi = K.euler_characteristic(), chq = Q.euler_characteristic(), n = long(act->group.order());
    oracle_result(r, "Euler characteristic", chi == n * chq,
                  "chi(K) = " + std::to_string(chi) + ", |G| chi(K/G) = " + std::to_string(n * chq));
  }
  return r;
}

// ---- text output -----------------------------------------------------------

void text_degrees(std::ostream& o, const json& ds) {
  o << "degree   dim  status     group\n";
  for (auto& d : ds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%6d %5zu  %-9s  ", d["degree"].get<int>(), d["dim"].get<std::size_t>(),
                  d["status"].get<std::string>().c_str());
    o << buf << d["group"].get<std::string>() << "\n";
  }
}

void text_report(std::ostream& o, const json& j) {
  const auto& p = j["provenance"];
  o << j["command"].get<std::string>() << "  ring " << p["ring"].get<std::string>();
  if (!p["bar_truncation"].is_null()) o << "  N_A " << p["bar_truncation"];
  if (!p["group_truncation"].is_null()) o << "  N_G " << p["group_truncation"];
  o << "  degrees " << p["degrees"][0] << ".." << p["degrees"][1] << "\n";
  if (j.contains("summands"))
    for (auto& s : j["summands"]) {
      o << "\nsummand " << s["representative"].get<std::string>();
      if (s.contains("centralizer")) o << "  centralizer " << s["centralizer"].size();
      o << "\n";
      text_degrees(o, s["degrees"]);
    }
  if (j.contains("e2")) {
    o << "\nE2\n";
    for (auto& e : j["e2"])
      o << "  (" << e["p"] << "," << e["q"] << ")  "
        << (e["available"].get<bool>() ? e["group"].get<std::string>() : std::string("n/a")) << "\n";
  }
  if (j.contains("complex")) {
    o << "\nquotient: " << j["complex"]["vertices"].size() << " vertices, " << j["complex"]["facets"].size()
      << " facets\n";
    text_degrees(o, j["simplicial"]);
  }
  if (j.contains("algebra")) o << "\ncochain algebra of dimension " << j["algebra"]["basis"].size() << "\n";
  if (j.contains("degrees")) {
    o << "\n";
    text_degrees(o, j["degrees"]);
  }
  if (j.contains("products") && !j["products"].is_null()) {
    o << "\nproducts\n";
    for (auto& x : j["products"]) {
      o << "  " << x["a"].get<std::string>() << " * " << x["b"].get<std::string>() << " = (";
      bool first = true;
      for (auto& c : x["coordinates"]) {
        o << (first ? "" : ", ") << c.get<std::string>();
        first = false;
      }
      o << ")\n";
    }
  }
  if (j.contains("oracle"))
    o << "\noracle (" << j["oracle"]["method"].get<std::string>() << "): "
      << (j["oracle"]["agree"].get<bool>() ? "agree" : "DISAGREE") << ", " << j["oracle"]["detail"].get<std::string>()
      << "\n";
}

int run_verify(const Job& job) {
  bool all = true;
  json crit = json::array();
  verify::run_acceptance(job.fixtures, [&](const verify::CriterionResult& c) {
    all = all && c.pass;
    if (job.format == "text") std::cout << verify::format(c) << std::endl;
    crit.push_back(json{{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}});
  });
  if (job.format == "structured") {
    json j;
    j["schema"] = kSchema;
    j["command"] = "verify";
    j["provenance"] = json{{"tool", "hhcalc"}, {"version", kVersion}, {"fixtures", job.fixtures}};
    j["criteria"] = crit;
    j["pass"] = all;
    std::cout << j.dump(2) << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild (co)homology of finite dg-algebras and their smash products"};
  app.require_subcommand(1);
  Job job;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"hh", "Hochschild cohomology HH*(A, A)"},
      {"hh-homology", "Hochschild homology HH_*(A, A)"},
      {"hh-smash", "HH*(A#G) through the double complex"},
      {"conjugacy-split", "HH*(A#G) as a sum over conjugacy classes"},
      {"groupcoh", "group cohomology H*(G; ring)"},
      {"pullpush", "HH*(ring G) from centralizer cohomology"},
      {"spectral", "E1 and E2 pages of the group filtration"},
      {"simplicial-algebra", "cochain algebra of a simplicial complex"},
      {"quotient", "quotient of a free simplicial action and HH of its cochains"},
      {"verify", "run the acceptance suite"}};
  for (auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&job, name = name] { job.command = name; });
    if (name != "verify") sub->add_option("inputs", job.inputs, "input files (JSON)")->required();
    sub->add_option("--ring", job.ring, "coefficient ring: z, q or fp:<p>");
    sub->add_option("--bar-truncation", job.bar_truncation, "maximal bar word length N_A");
    sub->add_option("--group-truncation", job.group_truncation, "maximal group cochain length N_G");
    sub->add_option("--degrees", job.degrees, "degree window lo..hi");
    sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--oracle", job.oracle, "cross-check against an independent computation");
    sub->add_flag("--products", job.products, "include product tables");
    sub->add_option("--cap", job.cap, "hard cap on truncations");
    if (name == "verify") sub->add_option("--fixtures", job.fixtures, "fixture directory");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (job.command == "verify") return run_verify(job);

  bool loading = true;
  try {
    Inputs in = load(job.inputs);
    Settings s = settle(job, in);
    loading = false;
    Report r;
    const auto& c = job.command;
    if (c == "hh" || c == "hh-homology") r = cmd_hh(job, in, s, c == "hh-homology");
    if (c == "hh-smash") r = cmd_smash(job, in, s);
    if (c == "conjugacy-split") r = cmd_split(job, in, s);
    if (c == "groupcoh") r = cmd_groupcoh(job, in, s);
    if (c == "pullpush") r = cmd_pullpush(job, in, s);
    if (c == "spectral") r = cmd_spectral(job, in, s);
    if (c == "simplicial-algebra") r = cmd_simplicial(job, in, s);
    if (c == "quotient") r = cmd_quotient(job, in, s);
    if (job.format == "structured")
      std::cout << r.j.dump(2) << "\n";
    else
      text_report(std::cout, r.j);
    return r.oracle_failed ? 1 : 0;
  } catch (const Error& e) {
    std::cerr << "hhcalc: " << e.what() << "\n";
    return loading || input_error(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "hhcalc: " << e.what() << "\n";
    return loading ? 2 : 1;
  }
}
