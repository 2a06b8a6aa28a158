#include "hh/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hh/error.hpp"
#include "json.hpp"

namespace hh::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto p = msg.rfind(": ");
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           (p == std::string::npos ? msg : msg.substr(p + 2)));
  }
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long>();
}

std::string string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

Rat coefficient(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    Rat q;
    bool ok = !s.empty() && s.find_first_not_of("+-0123456789/") == std::string::npos &&
              q.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
    if (!ok || q.get_den() == 0) fail(where, "bad coefficient '" + s + "'");
    q.canonicalize();
    return q;
  }
  fail(where, "expected an integer or a \"p/q\" string");
}

json coefficient_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

// index given as an integer or a label
std::size_t index_of(const json& j, const std::vector<std::string>& labels, const std::string& where) {
  if (j.is_number_integer()) {
    long i = j.get<long>();
    if (i < 0 || std::size_t(i) >= labels.size()) fail(where, "index " + std::to_string(i) + " out of range");
    return std::size_t(i);
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == s) return i;
    fail(where, "unknown label '" + s + "'");
  }
  fail(where, "expected an index or a label");
}

LinComb terms(const json& j, const std::vector<std::string>& labels, const char* key, const std::string& where) {
  LinComb c;
  array(j, where);
  for (std::size_t t = 0; t < j.size(); ++t) {
    std::string w = at(where, t);
    const json& e = j[t];
    if (e.is_array()) {
      if (e.size() != 2) fail(w, "expected [index, coeff]");
      c.push_back({std::uint32_t(index_of(e[0], labels, w + "[0]")), coefficient(e[1], w + "[1]")});
    } else if (e.is_object()) {
      c.push_back({std::uint32_t(index_of(field(e, key, w), labels, w + "." + key)),
                   coefficient(field(e, "coeff", w), w + ".coeff")});
    } else {
      fail(w, "expected {" + std::string(key) + ", coeff}");
    }
  }
  return c;
}

json terms_json(const LinComb& c, const char* key) {
  json a = json::array();
  for (auto& [k, x] : c) a.push_back(json{{key, k}, {"coeff", coefficient_json(x)}});
  return a;
}

void check_type(const json& j, const std::string& type) {
  if (j.is_object() && j.contains("type") && j["type"] != type)
    fail("type", "expected \"" + type + "\", found " + j["type"].dump());
}

Ring ring_of(const json& j, const std::string& where) {
  try {
    return Ring::parse(string(j, where));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(where, e.what());
  }
}

FiniteDgAlgebra algebra_from(const json& j) {
  check_type(j, "algebra");
  FiniteDgAlgebra a;
  a.ring = ring_of(field(j, "ring", "algebra"), "ring");
  const json& basis = array(field(j, "basis", "algebra"), "basis");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string w = at("basis", i);
    BasisElement b{string(field(basis[i], "label", w), w + ".label"),
                   int(integer(field(basis[i], "degree", w), w + ".degree"))};
    labels.push_back(b.label);
    a.basis.push_back(b);
  }
  if (a.basis.empty()) fail("basis", "empty basis");
  a.unit = index_of(field(j, "unit", "algebra"), labels, "unit");
  a.init_tables();
  try {
    std::vector<std::vector<bool>> seen(a.dim(), std::vector<bool>(a.dim()));
    if (j.contains("mult")) {
      const json& m = array(j["mult"], "mult");
      for (std::size_t t = 0; t < m.size(); ++t) {
        std::string w = at("mult", t);
        if (!m[t].is_array() || m[t].size() != 3) fail(w, "expected [i, j, terms]");
        auto i = index_of(m[t][0], labels, w + "[0]");
        auto k = index_of(m[t][1], labels, w + "[1]");
        if (seen[i][k]) fail(w, "duplicate product " + labels[i] + "*" + labels[k]);
        seen[i][k] = true;
        LinComb c = terms(m[t][2], labels, "k", w + "[2]");
        for (auto& [_, x] : c) x = a.ring.reduce(x);
        a.set_product(i, k, c);
      }
    }
    std::vector<bool> dseen(a.dim());
    if (j.contains("diff")) {
      const json& d = array(j["diff"], "diff");
      for (std::size_t t = 0; t < d.size(); ++t) {
        std::string w = at("diff", t);
        if (!d[t].is_array() || d[t].size() != 2) fail(w, "expected [i, terms]");
        auto i = index_of(d[t][0], labels, w + "[0]");
        if (dseen[i]) fail(w, "duplicate differential of " + labels[i]);
        dseen[i] = true;
        LinComb c = terms(d[t][1], labels, "j", w + "[1]");
        for (auto& [_, x] : c) x = a.ring.reduce(x);
        a.set_diff(i, c);
      }
    }
    if (j.contains("augmentation")) {
      const json& e = array(j["augmentation"], "augmentation");
      if (e.size() != a.dim()) fail("augmentation", "expected " + std::to_string(a.dim()) + " entries");
      Vec v(a.dim());
      for (std::size_t i = 0; i < a.dim(); ++i) v[i] = a.ring.reduce(coefficient(e[i], at("augmentation", i)));
      a.augmentation = v;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidRing) fail("coefficients", e.what());
    throw;
  }
  auto rep = validate_algebra(a);
  if (!rep.ok) throw Error(ErrorKind::ValidationError, "algebra " + rep.message());
  return a;
}

json algebra_json(const FiniteDgAlgebra& a) {
  json j;
  j["type"] = "algebra";
  j["ring"] = a.ring.name();
  j["basis"] = json::array();
  for (auto& b : a.basis) j["basis"].push_back(json{{"label", b.label}, {"degree", b.degree}});
  j["unit"] = a.unit;
  j["mult"] = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (!a.mult[i][k].empty()) j["mult"].push_back(json::array({i, k, terms_json(a.mult[i][k], "k")}));
  j["diff"] = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a.diff[i].empty()) j["diff"].push_back(json::array({i, terms_json(a.diff[i], "j")}));
  if (a.augmentation) {
    j["augmentation"] = json::array();
    for (auto& x : *a.augmentation) j["augmentation"].push_back(coefficient_json(x));
  }
  return j;
}

FiniteGroupData group_from(const json& j) {
  check_type(j, "group");
  const json& el = array(field(j, "elements", "group"), "elements");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < el.size(); ++i) labels.push_back(string(el[i], at("elements", i)));
  if (labels.empty()) fail("elements", "empty group");
  const json& t = array(field(j, "table", "group"), "table");
  if (t.size() != labels.size()) fail("table", "expected " + std::to_string(labels.size()) + " rows");
  std::vector<std::vector<int>> table(labels.size());
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::string w = at("table", r);
    array(t[r], w);
    if (t[r].size() != labels.size()) fail(w, "expected " + std::to_string(labels.size()) + " entries");
    for (std::size_t c = 0; c < t[r].size(); ++c) table[r].push_back(int(index_of(t[r][c], labels, at(w, c))));
  }
  return FiniteGroupData::from_table(labels, table);
}

json group_json(const FiniteGroupData& g) {
  json j;
  j["type"] = "group";
  j["elements"] = g.labels();
  j["table"] = g.table();
  return j;
}

SimplicialComplex complex_from(const json& j) {
  check_type(j, "complex");
  const json& v = array(field(j, "vertices", "complex"), "vertices");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < v.size(); ++i) labels.push_back(string(v[i], at("vertices", i)));
  const json& f = array(field(j, "facets", "complex"), "facets");
  std::vector<std::vector<int>> facets;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string w = at("facets", i);
    array(f[i], w);
    std::vector<int> s;
    for (std::size_t k = 0; k < f[i].size(); ++k) s.push_back(int(index_of(f[i][k], labels, at(w, k))));
    facets.push_back(s);
  }
  return SimplicialComplex::from_facets(labels, facets);
}

json complex_json(const SimplicialComplex& k) {
  json j;
  j["type"] = "complex";
  j["vertices"] = k.vertices();
  j["facets"] = json::array();
  for (auto& s : k.facets()) {
    json f = json::array();
    for (int v : s) f.push_back(k.vertices()[v]);
    j["facets"].push_back(f);
  }
  return j;
}

// inline object or path relative to base
json reference(const json& j, const std::string& key, const std::string& base, const std::string& where) {
  const json& r = field(j, key, where);
  if (r.is_object()) return r;
  if (r.is_string()) {
    std::filesystem::path p(r.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base) / p;
    try {
      return parse_text(read_file(p.string()));
    } catch (const Error& e) {
      fail(key, std::string("in ") + p.string() + ": " + e.what());
    }
  }
  fail(key, "expected an object or a file path");
}

ActionDocument action_from(const json& j, const std::string& base) {
  check_type(j, "action");
  ActionDocument d;
  d.algebra = algebra_from(reference(j, "algebra", base, "action"));
  FiniteGroupData G = group_from(reference(j, "group", base, "action"));
  const json& ms = array(field(j, "matrices", "action"), "matrices");
  if (ms.size() != G.order()) fail("matrices", "expected one matrix per group element");
  std::size_t n = d.algebra.dim();
  d.action.group = G;
  for (std::size_t g = 0; g < ms.size(); ++g) {
    std::string w = at("matrices", g);
    array(ms[g], w);
    if (ms[g].size() != n) fail(w, "expected " + std::to_string(n) + " rows");
    std::vector<std::vector<Rat>> dense(n, std::vector<Rat>(n));
    for (std::size_t r = 0; r < n; ++r) {
      std::string wr = at(w, r);
      array(ms[g][r], wr);
      if (ms[g][r].size() != n) fail(wr, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) {
        try {
          dense[r][c] = d.algebra.ring.reduce(coefficient(ms[g][r][c], at(wr, c)));
        } catch (const Error& e) {
          if (e.kind() == ErrorKind::InvalidRing) fail(at(wr, c), e.what());
          throw;
        }
      }
    }
    d.action.sigma.push_back(ExactMatrix::from_dense(dense, d.algebra.ring));
  }
  auto rep = validate_action(d.algebra, d.action);
  if (!rep.ok) throw Error(ErrorKind::ValidationError, "action " + rep.message());
  return d;
}

json action_json(const ActionDocument& d) {
  json j;
  j["type"] = "action";
  j["algebra"] = algebra_json(d.algebra);
  j["group"] = group_json(d.action.group);
  j["matrices"] = json::array();
  for (auto& m : d.action.sigma) {
    json rows = json::array();
    for (auto& r : m.dense()) {
      json row = json::array();
      for (auto& x : r) row.push_back(coefficient_json(x));
      rows.push_back(row);
    }
    j["matrices"].push_back(rows);
  }
  return j;
}

void parse_window(const std::string& s, int& lo, int& hi, const std::string& where) {
  auto p = s.find("..");
  try {
    if (p == std::string::npos) throw 0;
    std::size_t a = 0, b = 0;
    lo = std::stoi(s.substr(0, p), &a);
    hi = std::stoi(s.substr(p + 2), &b);
    if (a != p || b != s.size() - p - 2) throw 0;
  } catch (...) {
    fail(where, "expected lo..hi, found '" + s + "'");
  }
  if (lo > hi) fail(where, "empty window '" + s + "'");
}

Scenario scenario_from(const json& j, const std::string& base) {
  check_type(j, "scenario");
  Scenario s;
  s.name = j.contains("name") ? string(j["name"], "name") : "";
  s.complex = complex_from(reference(j, "complex", base, "scenario"));
  s.group = group_from(reference(j, "group", base, "scenario"));
  const auto& labels = s.complex.vertices();
  const json& ps = array(field(j, "permutations", "scenario"), "permutations");
  if (ps.size() != s.group.order()) fail("permutations", "expected one permutation per group element");
  for (std::size_t g = 0; g < ps.size(); ++g) {
    std::string w = at("permutations", g);
    array(ps[g], w);
    if (ps[g].size() != labels.size()) fail(w, "expected " + std::to_string(labels.size()) + " images");
    std::vector<int> p;
    for (std::size_t v = 0; v < ps[g].size(); ++v) p.push_back(int(index_of(ps[g][v], labels, at(w, v))));
    s.permutations.push_back(p);
  }
  if (j.contains("ring")) {
    s.ring = string(j["ring"], "ring");
    ring_of(j["ring"], "ring");
  }
  if (j.contains("bar_truncation")) s.bar_truncation = int(integer(j["bar_truncation"], "bar_truncation"));
  if (j.contains("group_truncation")) s.group_truncation = int(integer(j["group_truncation"], "group_truncation"));
  if (j.contains("degrees")) {
    s.has_degrees = true;
    parse_window(string(j["degrees"], "degrees"), s.lo, s.hi, "degrees");
  }
  simplicial_action(s.complex, s.group, s.permutations);
  return s;
}

json scenario_json(const Scenario& s) {
  json j;
  j["type"] = "scenario";
  j["name"] = s.name;
  j["complex"] = complex_json(s.complex);
  j["group"] = group_json(s.group);
  j["permutations"] = json::array();
  for (auto& p : s.permutations) {
    json a = json::array();
    for (int v : p) a.push_back(s.complex.vertices()[v]);
    j["permutations"].push_back(a);
  }
  if (!s.ring.empty()) j["ring"] = s.ring;
  if (s.bar_truncation >= 0) j["bar_truncation"] = s.bar_truncation;
  if (s.group_truncation >= 0) j["group_truncation"] = s.group_truncation;
  if (s.has_degrees) j["degrees"] = std::to_string(s.lo) + ".." + std::to_string(s.hi);
  return j;
}

// containers that fit on a line stay inline
void pretty(const json& j, int indent, std::string& out) {
  std::string flat = j.dump();
  if (!j.is_structured() || j.empty() || flat.size() + indent <= 78) {
    out += flat;
    return;
  }
  std::string pad(indent + 2, ' ');
  out += j.is_object() ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (j.is_object()) out += json(it.key()).dump() + ": ";
    pretty(*it, indent + 2, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (j.is_object() ? "}" : "]");
}

std::string dump(const json& j) {
  std::string out;
  pretty(j, 0, out);
  return out + "\n";
}

}  // namespace

FiniteDgAlgebra parse_algebra(const std::string& text) { return algebra_from(parse_text(text)); }
FiniteGroupData parse_group(const std::string& text) { return group_from(parse_text(text)); }
SimplicialComplex parse_complex(const std::string& text) { return complex_from(parse_text(text)); }
ActionDocument parse_action(const std::string& text, const std::string& base_dir) {
  return action_from(parse_text(text), base_dir);
}
Scenario parse_scenario(const std::string& text, const std::string& base_dir) {
  return scenario_from(parse_text(text), base_dir);
}

std::string serialize(const FiniteDgAlgebra& a) { return dump(algebra_json(a)); }
std::string serialize(const FiniteGroupData& g) { return dump(group_json(g)); }
std::string serialize(const SimplicialComplex& k) { return dump(complex_json(k)); }
std::string serialize(const ActionDocument& d) { return dump(action_json(d)); }
std::string serialize(const Scenario& s) { return dump(scenario_json(s)); }

std::string document_type(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail("document", "expected an object");
  if (j.contains("type")) {
    std::string t = string(j["type"], "type");
    for (const char* k : {"algebra", "group", "action", "complex", "scenario"})
      if (t == k) return t;
    fail("type", "unknown document type '" + t + "'");
  }
  if (j.contains("permutations")) return "scenario";
  if (j.contains("matrices")) return "action";
  if (j.contains("basis")) return "algebra";
  if (j.contains("facets")) return "complex";
  if (j.contains("elements")) return "group";
  fail("type", "cannot infer the document type");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string directory_of(const std::string& path) {
  auto p = std::filesystem::path(path).parent_path();
  return p.empty() ? "." : p.string();
}

FiniteDgAlgebra change_ring(const FiniteDgAlgebra& a, Ring r) {
  if (a.ring == r) return a;
  FiniteDgAlgebra b = a;
  b.ring = r;
  auto cast = [&](LinComb c) {
    for (auto& [_, x] : c) x = r.reduce(x);
    return normalize(c, r);
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    b.diff[i] = cast(a.diff[i]);
    for (std::size_t j = 0; j < a.dim(); ++j) b.mult[i][j] = cast(a.mult[i][j]);
  }
  if (b.augmentation)
    for (auto& x : *b.augmentation) x = r.reduce(x);
  auto rep = validate_algebra(b);
  if (!rep.ok) throw Error(ErrorKind::ValidationError, "algebra over " + r.name() + " " + rep.message());
  return b;
}

AlgebraAction change_ring(const AlgebraAction& act, Ring r) {
  AlgebraAction b{act.group, {}};
  for (auto& m : act.sigma) {
    auto d = m.dense();
    for (auto& row : d)
      for (auto& x : row) x = r.reduce(x);
    b.sigma.push_back(ExactMatrix::from_dense(d, r));
  }
  return b;
}

}  // namespace hh::io
