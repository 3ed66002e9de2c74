#pragma once

#include <span>
#include <vector>

#include "toricoh/lattice.hpp"

namespace toricoh {

// Normal form of a strictly convex lattice cone: some determinant -1 integer
// matrix sends its generators (v, w) to (0,1) and (p,-q). Always p >= 1,
// 0 <= q < p, gcd(p,q) = 1; (1,0) is the smooth case.
struct ConeType {
  Coord p = 1;
  Coord q = 0;
  friend bool operator==(const ConeType&, const ConeType&) = default;
};

ConeType cone_type(LatticeVector v, LatticeVector w);

// Continued fraction p/q = a1 - 1/(a2 - 1/(... - 1/ar)) with every ai >= 2.
std::vector<Coord> hj_cf(ConeType t);

// Inverse of hj_cf: evaluates the fraction from the right as a reduced p/q.
// The empty list evaluates to (1,0).
ConeType cf_eval(std::span<const Coord> coeffs);

// Exceptional curves of the minimal resolution, innermost first. Ray u_i has
// u_{i-1} + u_{i+1} = a_i * u_i with a_i = -self_intersections[i].
struct CurveChain {
  std::vector<LatticeVector> interior_rays;
  std::vector<Coord> self_intersections;

  bool empty() const { return interior_rays.empty(); }
  friend bool operator==(const CurveChain&, const CurveChain&) = default;
};

// Minimal smooth subdivision of the strictly convex cone (v, w):
// consecutive rays of v, interior..., w span unimodular cones and no
// interior ray can be dropped. Smooth input yields the empty chain.
CurveChain smooth_subdivide(LatticeVector v, LatticeVector w);

}  // namespace toricoh
