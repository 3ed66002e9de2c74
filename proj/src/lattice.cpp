#include "toricoh/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace toricoh {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::integer_overflow: return "IntegerOverflow";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::bad_index: return "BadIndex";
    case Errc::non_primitive_ray: return "NonPrimitiveRay";
    case Errc::zero_ray: return "ZeroRay";
    case Errc::duplicate_ray: return "DuplicateRay";
    case Errc::antipodal_cone: return "AntipodalCone";
    case Errc::not_strictly_convex: return "NotStrictlyConvex";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::unsupported_fan: return "UnsupportedFan";
    case Errc::no_gaps: return "NoGaps";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::unknown_name: return "UnknownName";
  }
  return "Error";
}

LatticeVector operator+(LatticeVector a, LatticeVector b) {
  return {checked_add(a.x, b.x), checked_add(a.y, b.y)};
}

LatticeVector operator-(LatticeVector a, LatticeVector b) {
  return {checked_sub(a.x, b.x), checked_sub(a.y, b.y)};
}

LatticeVector operator-(LatticeVector v) { return {checked_neg(v.x), checked_neg(v.y)}; }

LatticeVector operator*(Coord k, LatticeVector v) {
  return {checked_mul(k, v.x), checked_mul(k, v.y)};
}

Coord det2(LatticeVector a, LatticeVector b) {
  return checked_sub(checked_mul(a.x, b.y), checked_mul(a.y, b.x));
}

bool is_primitive(LatticeVector v) {
  if (v.is_zero()) return false;
  // std::gcd is undefined for INT64_MIN; reject such coordinates loudly.
  if (v.x == INT64_MIN || v.y == INT64_MIN) fail(Errc::integer_overflow, "coordinate out of range");
  return std::gcd(v.x, v.y) == 1;
}

LatticeVector primitive(LatticeVector v) {
  if (v.is_zero()) fail(Errc::zero_vector, "the zero vector spans no ray");
  if (v.x == INT64_MIN || v.y == INT64_MIN) fail(Errc::integer_overflow, "coordinate out of range");
  Coord g = std::gcd(v.x, v.y);
  return {v.x / g, v.y / g};
}

LatticeVector perp_ccw(LatticeVector v) { return {checked_neg(v.y), v.x}; }

namespace {

// Octant-style index of the direction of v: even values are the four axis
// directions, odd values the open quadrants, increasing counterclockwise
// from (1,0).
int direction_region(LatticeVector v) {
  if (v.is_zero()) fail(Errc::zero_vector, "the zero vector has no direction");
  if (v.y == 0) return v.x > 0 ? 0 : 4;
  if (v.y > 0) {
    if (v.x > 0) return 1;
    return v.x == 0 ? 2 : 3;
  }
  if (v.x < 0) return 5;
  return v.x == 0 ? 6 : 7;
}

}  // namespace

Ordering angular_compare(LatticeVector a, LatticeVector b) {
  int ra = direction_region(a);
  int rb = direction_region(b);
  if (ra != rb) return ra < rb ? Ordering::less : Ordering::greater;
  Coord d = det2(a, b);
  if (d > 0) return Ordering::less;
  if (d < 0) return Ordering::greater;
  return Ordering::equal;
}

bool angular_less(LatticeVector a, LatticeVector b) {
  return angular_compare(a, b) == Ordering::less;
}

bool ccw_between(LatticeVector a, LatticeVector b, LatticeVector x) {
  if (a == b) throw std::invalid_argument("ccw_between: arc endpoints must differ");
  if (x == a || x == b) return false;
  // Unroll the circle at (1,0): for a < b the arc is the interval (a, b),
  // otherwise it wraps and is the complement of [b, a].
  if (angular_less(a, b)) return angular_less(a, x) && angular_less(x, b);
  return angular_less(a, x) || angular_less(x, b);
}

std::string to_string(LatticeVector v) {
  return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

}  // namespace toricoh
