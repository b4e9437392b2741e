#include "doctest.h"

#include "ltireach/cli/instance.hpp"
#include "ltireach/linalg/matrix.hpp"
#include "support/fixtures.hpp"
#include "support/process.hpp"
#include "support/random_systems.hpp"

#include <filesystem>

using namespace ltireach;
using testing::vec;

namespace {

bool same_system(const LtiSystem& a, const LtiSystem& b) {
  if (a.a != b.a || a.source != b.source || !(a.target == b.target)) return false;
  if (a.controls.components.size() != b.controls.components.size()) return false;
  for (std::size_t i = 0; i < a.controls.components.size(); ++i)
    if (!(a.controls.components[i] == b.controls.components[i])) return false;
  return true;
}

ParseError parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for:\n" << text);
  return ParseError(0, 0, "");
}

const char* const kFig2 =
    "dim 2\n"
    "matrix\n"
    "  1/3 0\n"
    "  0 2/3\n"
    "control\n"
    "  vertices\n"
    "    -2 -1\n"
    "    0 -1\n"
    "    0 1\n"
    "    2 1\n"
    "source\n"
    "  0 0\n"
    "target\n"
    "  vertices\n"
    "    1 1\n";

}  // namespace

TEST_CASE("fig2 instance parses") {
  const LtiSystem s = parse_instance(kFig2);
  CHECK(s.a == parse_matrix("1/3 0; 0 2/3"));
  CHECK(s.controls.components.size() == 1);
  CHECK(s.controls.components.front() == testing::fig2_controls());
  CHECK(s.source == vec({0, 0}));
  CHECK(s.target.vertices == std::vector<RatVector>{vec({1, 1})});
  CHECK(emit_instance(s) == kFig2);
}

TEST_CASE("comments, spacing and inline part keywords") {
  const LtiSystem s = parse_instance(
      "# leading comment\n"
      "dim 2   # trailing\n\n"
      "matrix\n1/3 0\n  0   2/3\r\n"
      "control vertices\n-2 -1\n0 -1\n0 1\n2 1\n"
      "target vertices\n1 1\n");
  CHECK(emit_instance(s) == kFig2);
  CHECK(instance_hash(s) == instance_hash(parse_instance(kFig2)));
}

TEST_CASE("round trip on random systems") {
  std::mt19937 g(99);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + t % 4;
    LtiSystem s;
    s.a = testing::random_stable_matrix(g, d);
    s.controls.components.push_back(testing::random_centered_polytope(g, d, 1 + t % d));
    if (t % 3 == 0) {
      GenPolyhedron extra = GenPolyhedron::affine(testing::random_vector(g, d), {testing::random_vector(g, d)});
      extra.rays.push_back(testing::random_vector(g, d));
      s.controls.components.push_back(extra);
    }
    s.source = t % 2 ? testing::random_vector(g, d) : RatVector::Zero(d);
    s.target = t % 5 == 0 ? GenPolyhedron(d) : GenPolyhedron::polytope({testing::random_vector(g, d, 5, 7)});
    s.validate();
    const std::string text = emit_instance(s);
    const LtiSystem back = parse_instance(text);
    CHECK(same_system(back, s));
    CHECK(emit_instance(back) == text);
  }
}

TEST_CASE("round trip on the data corpus") {
  for (const auto& entry : std::filesystem::directory_iterator(LTIREACH_TEST_DATA)) {
    if (entry.path().extension() != ".lti") continue;
    CAPTURE(entry.path().string());
    const LtiSystem s = read_instance_file(entry.path().string());
    const std::string canon = emit_instance(s);
    CHECK(emit_instance(parse_instance(canon)) == canon);
    CHECK(same_system(parse_instance(canon), s));
  }
}

TEST_CASE("source defaults to the origin") {
  const LtiSystem s = parse_instance("dim 1\nmatrix\n1/2\ncontrol\nvertices\n-1\n1\ntarget\nvertices\n0\n");
  CHECK(s.source == RatVector::Zero(1));
}

TEST_CASE("parse errors carry line and column") {
  const ParseError zero = parse_error("dim 2\nmatrix\n  1/0 0\n  0 1\n");
  CHECK(zero.line() == 3);
  CHECK(zero.column() == 3);
  CHECK(std::string(zero.what()).find("1/0") != std::string::npos);

  const ParseError width = parse_error("dim 2\nmatrix\n1 0 0\n");
  CHECK(width.line() == 3);
  CHECK(std::string(width.what()).find("3 entries but dim is 2") != std::string::npos);

  const ParseError rows = parse_error("dim 2\nmatrix\n1 0\ncontrol\nvertices\n0 0\ntarget\nvertices\n0 0\n");
  CHECK(rows.line() == 2);
  CHECK(std::string(rows.what()).find("1 rows but dim is 2") != std::string::npos);

  CHECK(parse_error("dim 0\n").column() == 5);
  CHECK(parse_error("matrix\n").line() == 1);
  CHECK(parse_error("dim 1\nmatrix\n1\nbogus\n").line() == 4);
  CHECK(parse_error("dim 1\nmatrix\n1\ncontrol\n1\n").line() == 5);
  CHECK(std::string(parse_error("dim 1\nmatrix\n1\ncontrol\nvertices\n0\n").what()).find("missing target") !=
        std::string::npos);
  CHECK(std::string(parse_error("dim 1\nmatrix\n1\ncontrol\ntarget\nvertices\n0\n").what()).find("no vertices") !=
        std::string::npos);
  CHECK(parse_error("dim 1\nmatrix\n1\nsource\n0\n0\n").line() == 6);
  CHECK(parse_error("dim 1\nmatrix\n1\nmatrix\n").line() == 4);
  CHECK(parse_error("dim 1\nmatrix\n1\nsource vertices\n").column() == 8);
  CHECK(parse_error("dim 1\nmatrix\nx1\n").column() == 1);
}

TEST_CASE("instance hash") {
  const LtiSystem s = parse_instance(kFig2);
  CHECK(instance_hash(s).size() == 16);
  LtiSystem t = s;
  t.target.vertices.front()(0) = Rat(2);
  CHECK(instance_hash(t) != instance_hash(s));
  // published FNV-1a test vectors
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}
