#pragma once

#include <cstdint>
#include <string>

#include "toricoh/error.hpp"

namespace toricoh {

using Coord = std::int64_t;

// Arithmetic on coordinates is always overflow-checked; a fan whose data
// exceeds the machine range is rejected loudly instead of wrapping. Inline:
// these sit in the innermost loops.
inline Coord checked_add(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::integer_overflow, "overflow in addition");
  return r;
}

inline Coord checked_sub(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::integer_overflow, "overflow in subtraction");
  return r;
}

inline Coord checked_mul(Coord a, Coord b) {
  Coord r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::integer_overflow, "overflow in multiplication");
  return r;
}

inline Coord checked_neg(Coord a) { return checked_sub(0, a); }

struct LatticeVector {
  Coord x = 0;
  Coord y = 0;

  bool is_zero() const { return x == 0 && y == 0; }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

LatticeVector operator+(LatticeVector a, LatticeVector b);
LatticeVector operator-(LatticeVector a, LatticeVector b);
LatticeVector operator-(LatticeVector v);
LatticeVector operator*(Coord k, LatticeVector v);

// Determinant of the 2x2 matrix with columns a, b. Positive iff b lies
// counterclockwise of a by less than a half turn.
Coord det2(LatticeVector a, LatticeVector b);

bool is_primitive(LatticeVector v);
LatticeVector primitive(LatticeVector v);

// Rotation by a quarter turn counterclockwise.
LatticeVector perp_ccw(LatticeVector v);

enum class Ordering { less, equal, greater };

// Total order on nonzero directions by angle in [0, 2*pi), counterclockwise
// from (1,0). Exact: quadrant index first, then a determinant sign.
Ordering angular_compare(LatticeVector a, LatticeVector b);
bool angular_less(LatticeVector a, LatticeVector b);

// True iff x lies strictly inside the open counterclockwise arc from a to b.
// Requires a != b; endpoints themselves are never inside.
bool ccw_between(LatticeVector a, LatticeVector b, LatticeVector x);

std::string to_string(LatticeVector v);

}  // namespace toricoh
