#include <doctest.h>

#include "hh/error.hpp"
#include "hh/io.hpp"

using namespace hh;

namespace {

std::string fixture(const std::string& name) { return io::read_file(std::string(HH_FIXTURE_DIR) + "/" + name); }
std::string data(const std::string& name) { return io::read_file(std::string(HH_TEST_DATA_DIR) + "/" + name); }

std::string error_of(const std::function<void()>& f, ErrorKind& kind) {
  try {
    f();
  } catch (const Error& e) {
    kind = e.kind();
    return e.what();
  }
  kind = ErrorKind::ShapeMismatch;
  return "";
}

}  // namespace

TEST_CASE("bundled algebras parse and round-trip") {
  for (auto name : {"exterior.json", "square-zero.json", "dual-numbers.json", "integers.json"}) {
    auto a = io::parse_algebra(fixture(name));
    CHECK(validate_algebra(a).ok);
    auto text = io::serialize(a);
    CHECK(io::parse_algebra(text) == a);
    CHECK(io::serialize(io::parse_algebra(text)) == text);
  }
  auto ext = io::parse_algebra(fixture("exterior.json"));
  REQUIRE(ext.dim() == 2);
  CHECK(ext.basis[0].label == "1");
  CHECK(ext.basis[1].label == "x");
  CHECK(ext.deg(1) == 1);
  CHECK(ext == exterior_algebra(Ring::Q(), 1));
}

TEST_CASE("bundled groups parse and round-trip") {
  for (auto name : {"Z2.json", "Z3.json", "Z6.json", "S3.json"}) {
    auto g = io::parse_group(fixture(name));
    CHECK(io::parse_group(io::serialize(g)) == g);
  }
  auto s3 = io::parse_group(fixture("S3.json"));
  CHECK(s3.order() == 6);
  CHECK(s3.classes().size() == 3);
  CHECK(io::parse_group(fixture("Z6.json")) == cyclic_group(6));
}

TEST_CASE("actions, complexes and scenarios round-trip") {
  for (auto name : {"exterior-sign.json", "square-zero-sign.json", "dual-numbers-sign.json"}) {
    auto d = io::parse_action(fixture(name), HH_FIXTURE_DIR);
    auto back = io::parse_action(io::serialize(d));
    CHECK(back.algebra == d.algebra);
    CHECK(back.action.group == d.action.group);
    CHECK(back.action.sigma == d.action.sigma);
    CHECK(d.action.sigma[1].at(1, 1) == -1);
  }
  for (auto name : {"hexagon.json", "octahedron.json"}) {
    auto k = io::parse_complex(fixture(name));
    CHECK(io::parse_complex(io::serialize(k)) == k);
  }
  auto s = io::parse_scenario(fixture("s1-antipodal.json"), HH_FIXTURE_DIR);
  CHECK(s.name == "s1-antipodal");
  CHECK(s.complex.count(1) == 6);
  CHECK(s.group.order() == 2);
  CHECK(s.ring == "q");
  CHECK(s.has_degrees);
  CHECK(s.hi == 1);
  auto back = io::parse_scenario(io::serialize(s));
  CHECK(back.complex == s.complex);
  CHECK(back.permutations == s.permutations);
  CHECK(io::serialize(back) == io::serialize(s));
}

TEST_CASE("document types") {
  CHECK(io::document_type(fixture("exterior.json")) == "algebra");
  CHECK(io::document_type(fixture("S3.json")) == "group");
  CHECK(io::document_type(fixture("exterior-sign.json")) == "action");
  CHECK(io::document_type(fixture("hexagon.json")) == "complex");
  CHECK(io::document_type(fixture("s1-antipodal.json")) == "scenario");
  CHECK(io::document_type(R"({"elements":["e"],"table":[[0]]})") == "group");
}

TEST_CASE("parse and validation errors") {
  ErrorKind k;
  auto msg = error_of([] { io::parse_algebra(data("d2-nonzero.json")); }, k);
  CHECK(k == ErrorKind::ValidationError);
  CHECK(msg.find("d^2") != std::string::npos);
  CHECK(msg.find("(a)") != std::string::npos);

  msg = error_of([] { io::parse_group(data("syntax-error.json")); }, k);
  CHECK(k == ErrorKind::ParseError);
  CHECK(msg.find("line 4") != std::string::npos);

  msg = error_of([] { io::parse_algebra(data("missing-field.json")); }, k);
  CHECK(k == ErrorKind::ParseError);
  CHECK(msg.find("basis[0]") != std::string::npos);
  CHECK(msg.find("degree") != std::string::npos);

  msg = error_of([] { io::parse_algebra(R"({"ring":"z","basis":[{"label":"1","degree":0}],"unit":0,
      "mult":[[0,0,[{"k":0,"coeff":"1/2"}]]]})"); }, k);
  CHECK(k == ErrorKind::ParseError);
  CHECK(msg.find("coefficients") != std::string::npos);

  msg = error_of([] { io::parse_algebra(R"({"ring":"r","basis":[],"unit":0})"); }, k);
  CHECK(k == ErrorKind::ParseError);
  CHECK(msg.find("ring") != std::string::npos);

  msg = error_of([] { io::parse_group(R"({"elements":["e","g"],"table":[[0,1],[1,1]]})"); }, k);
  CHECK(k == ErrorKind::ValidationError);

  msg = error_of([] { io::parse_action(R"({"algebra":"exterior.json","group":"Z3.json",
      "matrices":[[[1,0],[0,-1]],[[1,0],[0,-1]],[[1,0],[0,-1]]]})", HH_FIXTURE_DIR); }, k);
  CHECK(k == ErrorKind::ValidationError);

  msg = error_of([] { io::parse_complex(R"({"vertices":["a","b"],"facets":[["a","c"]]})"); }, k);
  CHECK(k == ErrorKind::ParseError);
  CHECK(msg.find("facets[0][1]") != std::string::npos);
}

TEST_CASE("change of ring") {
  auto a = io::parse_algebra(fixture("dual-numbers.json"));
  auto q = io::change_ring(a, Ring::Q());
  CHECK(q.ring == Ring::Q());
  CHECK(io::change_ring(q, Ring::Z()) == a);
  CHECK(io::change_ring(a, Ring::Fp(3)).ring == Ring::Fp(3));
}
