#include "toricoh/oracle.hpp"

#include <utility>
#include <vector>

#include "toricoh/classify.hpp"

namespace toricoh::oracle {

Coord count_lattice_slice(Coord p, Coord q, Coord d) {
  Coord n = 0;
  for (Coord s = 0; s <= d; ++s) {
    Coord t = d - s;
    if (s == 0 && t == 0) continue;
    if (p * t >= q * s) ++n;
  }
  return n;
}

ConeType normal_form_search(LatticeVector v, LatticeVector w, const SearchBudget& budget) {
  if (det2(v, w) <= 0)
    fail(Errc::not_strictly_convex, "normal form search needs a strictly convex ccw cone");
  const Coord bound = budget.max_entry;

  // All candidate top rows (a,b) kill v; all candidate bottom rows (c,d)
  // send v to second coordinate 1. Every matrix in the box is covered: any
  // other rows fail one of those two equations outright.
  std::vector<std::pair<Coord, Coord>> top, bottom;
  for (Coord a = -bound; a <= bound; ++a)
    for (Coord b = -bound; b <= bound; ++b) {
      Coord dot = a * v.x + b * v.y;
      if (dot == 0) top.emplace_back(a, b);
      if (dot == 1) bottom.emplace_back(a, b);
    }

  for (auto [a, b] : top)
    for (auto [c, d] : bottom) {
      if (a * d - b * c != -1) continue;
      Coord p = a * w.x + b * w.y;
      Coord q = -(c * w.x + d * w.y);
      if (p > 0 && q >= 0 && q < p) return {p, q};
    }
  fail(Errc::budget_exhausted,
       "no normal-form witness with entries bounded by " + std::to_string(bound));
}

bool check_complete_cover(const Fan& f) {
  if (f.cones.empty()) return false;
  auto arcs = support_arcs(f);
  if (arcs.empty()) return false;
  for (std::size_t i = 0; i < arcs.size(); ++i)
    if (arcs[i].end != arcs[(i + 1) % arcs.size()].start) return false;
  return true;
}

}  // namespace toricoh::oracle
