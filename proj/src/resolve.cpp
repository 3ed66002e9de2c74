#include "toricoh/resolve.hpp"

#include <numeric>
#include <stdexcept>

namespace toricoh {

namespace {

struct Bezout {
  Coord g, x, y;  // x*a + y*b == g == gcd(a,b) >= 0
};

Bezout ext_gcd(Coord a, Coord b) {
  Coord old_r = a, r = b;
  Coord old_x = 1, x = 0;
  Coord old_y = 0, y = 1;
  while (r != 0) {
    Coord quot = old_r / r;
    Coord tmp;
    tmp = old_r - quot * r; old_r = r; r = tmp;
    tmp = old_x - quot * x; old_x = x; x = tmp;
    tmp = old_y - quot * y; old_y = y; y = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
  return {old_r, old_x, old_y};
}

[[noreturn]] void bad_type(ConeType t) {
  throw std::invalid_argument("invalid cone type (" + std::to_string(t.p) + "," +
                              std::to_string(t.q) + ")");
}

// Second row (c, d) of the normalizing matrix: c*v.x + d*v.y = 1 shifted so
// that q = -(c*w.x + d*w.y) lands in [0, p).
struct Normalizer {
  ConeType type;
  Coord c, d;
};

Normalizer normalizer(LatticeVector v, LatticeVector w) {
  Coord p = det2(v, w);
  if (p <= 0)
    fail(Errc::not_strictly_convex, "generators " + to_string(v) + ", " + to_string(w) +
                                        " do not span a strictly convex ccw cone");
  if (!is_primitive(v) || !is_primitive(w))
    throw std::invalid_argument("cone generators must be primitive");
  auto bz = ext_gcd(v.x, v.y);
  Coord c = bz.x, d = bz.y;
  Coord q0 = checked_neg(checked_add(checked_mul(c, w.x), checked_mul(d, w.y)));
  Coord q = ((q0 % p) + p) % p;
  Coord t = (q - q0) / p;
  c = checked_add(c, checked_mul(t, v.y));
  d = checked_sub(d, checked_mul(t, v.x));
  return {{p, q}, c, d};
}

}  // namespace

ConeType cone_type(LatticeVector v, LatticeVector w) { return normalizer(v, w).type; }

std::vector<Coord> hj_cf(ConeType t) {
  if (t.p < 1 || t.q < 0 || t.q >= t.p) bad_type(t);
  std::vector<Coord> coeffs;
  coeffs.reserve(32);
  Coord p = t.p, q = t.q;
  while (q != 0) {
    Coord r = p - q;
    if (r <= q) {
      // A run of 2s: the step (p,q) -> (q, 2q-p) keeps r = p-q fixed and
      // lowers q by r, so the whole run is one division.
      Coord k = q / r;
      Coord s = q - k * r;
      coeffs.insert(coeffs.end(), static_cast<std::size_t>(k), 2);
      p = s + r;
      q = s;
    } else {
      Coord a = (p + q - 1) / q;  // ceil(p/q), here >= 3
      coeffs.push_back(a);
      Coord np = q;
      q = a * q - p;
      p = np;
    }
  }
  // The recursion preserves gcd(p,q) and ends on (gcd, 0).
  if (p != 1) bad_type(t);
  return coeffs;
}

ConeType cf_eval(std::span<const Coord> coeffs) {
  Coord p = 1, q = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (*it < 2) throw std::invalid_argument("continued fraction coefficients must be >= 2");
    Coord np = checked_sub(checked_mul(*it, p), q);
    q = p;
    p = np;
  }
  return {p, q};
}

CurveChain smooth_subdivide(LatticeVector v, LatticeVector w) {
  auto norm = normalizer(v, w);
  CurveChain chain;
  if (norm.type.p == 1) return chain;

  auto coeffs = hj_cf(norm.type);
  // In normal-form coordinates the resolution rays start at (0,1), (1,0) and
  // follow u_{i+1} = a_i*u_i - u_{i-1}; pulled back, (1,0) becomes (-d, c).
  LatticeVector prev = v;
  LatticeVector cur{checked_neg(norm.d), norm.c};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    chain.interior_rays.push_back(cur);
    chain.self_intersections.push_back(-coeffs[i]);
    LatticeVector next = coeffs[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  if (cur != w) throw std::logic_error("resolution chain failed to land on the far generator");
  return chain;
}

}  // namespace toricoh
