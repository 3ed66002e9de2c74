#include <random>

#include "doctest.h"
#include "support.hpp"
#include "toricoh/fan.hpp"

using namespace toricoh;

namespace {

Errc code_of(const std::string& text) {
  try {
    parse_fan(text);
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a parse error");
}

}  // namespace

TEST_CASE("parse a two-ray fan") {
  Fan f = parse_fan("ray 1 0\nray 0 1\ncone 0 1\n");
  REQUIRE(f.rays.size() == 2);
  REQUIRE(f.cones.size() == 1);
  CHECK(f.rays[0] == LatticeVector{1, 0});
  CHECK(f.rays[1] == LatticeVector{0, 1});
  CHECK(f.cone(0) == Cone2{{1, 0}, {0, 1}});
  CHECK(f.name.empty());
}

TEST_CASE("parse skips comments and blank lines") {
  Fan f = parse_fan("# header\n\nname demo # trailing\nray 1 0 # the x axis\nray 0 1\ncone 0 1\n");
  CHECK(f.name == "demo");
  CHECK(f.rays.size() == 2);
  CHECK(f.cones.size() == 1);
}

TEST_CASE("parse reorders clockwise cone pairs") {
  Fan f = parse_fan("ray 1 0\nray 0 1\ncone 1 0\n");
  CHECK(f.cone(0) == Cone2{{1, 0}, {0, 1}});
}

TEST_CASE("parse rejects malformed input") {
  CHECK(code_of("ray 2 4\ncone 0 1\n") == Errc::non_primitive_ray);
  CHECK(code_of("ray 1 0\ncone 0 1\n") == Errc::bad_index);
  CHECK(code_of("ray 0 0\n") == Errc::zero_ray);
  CHECK(code_of("ray 1 0\nray 1 0\n") == Errc::duplicate_ray);
  CHECK(code_of("ray 1 0\nray -1 0\ncone 0 1\n") == Errc::antipodal_cone);
  CHECK(code_of("ray 1 0\ncone 0 0\n") == Errc::antipodal_cone);
  CHECK(code_of("rays 1 0\n") == Errc::syntax_error);
  CHECK(code_of("ray 1\n") == Errc::syntax_error);
  CHECK(code_of("ray 1 2 3\n") == Errc::syntax_error);
  CHECK(code_of("ray 1 x\n") == Errc::syntax_error);
  CHECK(code_of("name a\nname b\n") == Errc::syntax_error);
  CHECK(code_of("ray 9999999999999 1\n") == Errc::syntax_error);
}

TEST_CASE("validate flags singular cones") {
  Fan f = parse_fan("ray 1 0\nray 1 2\ncone 0 1\n");
  auto report = validate_fan(f);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::singular_cone);
  CHECK(report.violations[0].to_line() == "SingularCone: cone ((1,0),(1,2)) has determinant 2");
}

TEST_CASE("validate flags overlapping cones") {
  Fan f = parse_fan("ray 1 0\nray 0 1\nray 1 1\ncone 0 1\ncone 0 2\n");
  auto report = validate_fan(f);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::overlapping_cones);
}

TEST_CASE("validate flags a stray ray inside a cone") {
  Fan f;
  f.rays = {{1, 0}, {0, 1}, {2, 1}};
  f.cones = {{0, 1}};
  auto report = validate_fan(f);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].kind == ViolationKind::overlapping_cones);
}

TEST_CASE("validate accepts the projective plane fan") {
  CHECK(validate_fan(builtin_fan("p2")).ok());
}

TEST_CASE("validate reports hand-built structural breakage") {
  Fan f;
  f.rays = {{1, 0}, {0, 2}, {1, 0}};
  f.cones = {{0, 5}, {1, 0}};
  auto report = validate_fan(f);
  bool saw_nonprimitive = false, saw_duplicate = false, saw_bad_index = false;
  for (const auto& v : report.violations) {
    saw_nonprimitive |= v.kind == ViolationKind::non_primitive_ray;
    saw_duplicate |= v.kind == ViolationKind::duplicate_ray;
    saw_bad_index |= v.kind == ViolationKind::bad_index;
  }
  CHECK(saw_nonprimitive);
  CHECK(saw_duplicate);
  CHECK(saw_bad_index);

  Fan g;
  g.rays = {{1, 0}, {0, 1}};
  g.cones = {{1, 0}};  // clockwise, but canonicalize was never run
  auto greport = validate_fan(g);
  REQUIRE(greport.violations.size() == 1);
  CHECK(greport.violations[0].kind == ViolationKind::misoriented_cone);

  Fan h;
  h.rays = {{1, 0}, {-1, 0}};
  h.cones = {{0, 1}};
  auto hreport = validate_fan(h);
  REQUIRE(hreport.violations.size() == 1);
  CHECK(hreport.violations[0].kind == ViolationKind::degenerate_cone);
}

TEST_CASE("is_smooth_cone checks the determinant") {
  CHECK(is_smooth_cone({{1, 0}, {0, 1}}));
  CHECK(is_smooth_cone({{1, 1}, {1, 2}}));
  CHECK_FALSE(is_smooth_cone({{1, 0}, {1, 2}}));
}

TEST_CASE("is_complete on the builtin corpus") {
  CHECK(is_complete(builtin_fan("p2")));
  CHECK(is_complete(builtin_fan("p1xp1")));
  CHECK(is_complete(builtin_fan("hirzebruch:4")));
  CHECK_FALSE(is_complete(builtin_fan("c2")));
  CHECK_FALSE(is_complete(builtin_fan("p1xc")));
  CHECK_FALSE(is_complete(builtin_fan("line")));
  CHECK_FALSE(is_complete(builtin_fan("three-quadrants")));
}

TEST_CASE("apply_unimodular") {
  Fan c2 = builtin_fan("c2");
  Fan same = apply_unimodular(c2, Mat2{});
  CHECK(same == c2);

  Fan sheared = apply_unimodular(c2, Mat2{1, 0, 1, 1});
  CHECK(sheared.rays[0] == LatticeVector{1, 1});
  CHECK(sheared.rays[1] == LatticeVector{0, 1});
  CHECK(det2(sheared.cone(0).v, sheared.cone(0).w) == 1);

  CHECK_THROWS_AS(apply_unimodular(c2, Mat2{0, 1, 1, 0}), Error);  // determinant -1
  CHECK_THROWS_AS(apply_unimodular(c2, Mat2{2, 0, 0, 1}), Error);
}

TEST_CASE("serialize then parse is the identity") {
  std::mt19937 rng(7101);
  for (int iter = 0; iter < 200; ++iter) {
    Fan f = testing::random_smooth_fan(rng);
    Fan reparsed = parse_fan(serialize_fan(f));
    CHECK(reparsed == f);
  }
  for (const auto& name : builtin_corpus()) {
    Fan f = builtin_fan(name);
    CHECK(parse_fan(serialize_fan(f)) == f);
  }
}

TEST_CASE("parse canonicalizes declaration order") {
  // Same fan written with cones out of angular order and flipped pairs.
  Fan a = parse_fan("ray 1 0\nray 0 1\nray -1 -1\ncone 2 1\ncone 0 1\ncone 2 0\n");
  Fan b = parse_fan(serialize_fan(a));
  CHECK(a == b);
  CHECK(a.cones[0] == ConeRef{0, 1});
}

TEST_CASE("unimodular maps preserve fan structure") {
  std::mt19937 rng(7102);
  for (int iter = 0; iter < 100; ++iter) {
    Fan f = testing::random_smooth_fan(rng);
    Mat2 m = testing::random_unimodular(rng);
    Fan g = apply_unimodular(f, m);
    CHECK(g.rays.size() == f.rays.size());
    CHECK(g.cones.size() == f.cones.size());
    CHECK(validate_fan(g).ok());
    CHECK(is_complete(g) == is_complete(f));
    for (std::size_t k = 0; k < f.cones.size(); ++k)
      CHECK(det2(f.cone(k).v, f.cone(k).w) == det2(g.cone(k).v, g.cone(k).w));
  }
}

TEST_CASE("valid random fans have pairwise disjoint cone interiors") {
  std::mt19937 rng(7103);
  for (int iter = 0; iter < 100; ++iter) {
    Fan f = testing::random_smooth_fan(rng);
    REQUIRE(validate_fan(f).ok());
    for (std::size_t a = 0; a < f.cones.size(); ++a)
      for (std::size_t b = a + 1; b < f.cones.size(); ++b) {
        Cone2 ca = f.cone(a), cb = f.cone(b);
        CHECK_FALSE(ca.v == cb.v);
        CHECK_FALSE(ccw_between(ca.v, ca.w, cb.v));
        CHECK_FALSE(ccw_between(cb.v, cb.w, ca.v));
      }
  }
}
