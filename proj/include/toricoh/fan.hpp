#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toricoh/lattice.hpp"

namespace toricoh {

// Two-dimensional cone spanned by primitive generators in counterclockwise
// order: det2(v, w) > 0.
struct Cone2 {
  LatticeVector v;
  LatticeVector w;
  friend bool operator==(const Cone2&, const Cone2&) = default;
};

// Cone as a pair of indices into Fan::rays, (i, j) counterclockwise.
struct ConeRef {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const ConeRef&, const ConeRef&) = default;
};

struct Fan {
  std::string name;  // empty = unnamed
  std::vector<LatticeVector> rays;
  std::vector<ConeRef> cones;

  Cone2 cone(std::size_t k) const;
  std::optional<std::size_t> ray_index(LatticeVector r) const;
  bool ray_used(std::size_t ray) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

// Puts each cone's generators in counterclockwise order where possible and
// sorts the cone list by start-ray angle. Parsing, completion and unimodular
// maps all normalize through this, so equal fans compare equal.
void canonicalize_cones(Fan& f);

// Text format, one directive per line. '#' starts a comment anywhere in a
// line; blank lines are skipped.
//   name <label>        at most once
//   ray <x> <y>         primitive, indexed in declaration order
//   cone <i> <j>        0-based ray indices, reordered to ccw
Fan parse_fan(std::istream& in);
Fan parse_fan(const std::string& text);
std::string serialize_fan(const Fan& f);

enum class ViolationKind {
  zero_ray,
  non_primitive_ray,
  duplicate_ray,
  bad_index,
  degenerate_cone,
  misoriented_cone,
  singular_cone,
  overlapping_cones,
};

const char* violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string detail;

  std::string to_line() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every structural invariant; reports all findings and never throws.
ValidationReport validate_fan(const Fan& f);

bool is_smooth_cone(const Cone2& c);

// True iff the closed cones cover every direction. Works directly on the
// sorted cone list; the support-arc machinery is a separate code path.
bool is_complete(const Fan& f);

// Integer 2x2 matrix, row-major [[a, b], [c, d]].
struct Mat2 {
  Coord a = 1, b = 0, c = 0, d = 1;

  Coord det() const;
  LatticeVector apply(LatticeVector v) const;
};

// Change of basis by a determinant +1 integer matrix.
Fan apply_unimodular(const Fan& f, const Mat2& m);

}  // namespace toricoh
