#include "toricoh/classify.hpp"

#include <algorithm>

namespace toricoh {

std::vector<SupportArc> support_arcs(const Fan& f) {
  struct Item {
    LatticeVector s, e;
  };
  std::vector<Item> items;
  for (const auto& c : f.cones) items.push_back({f.rays[c.i], f.rays[c.j]});
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!f.ray_used(i)) items.push_back({f.rays[i], f.rays[i]});
  if (items.empty()) return {};

  // Distinct starts in a valid fan, so this order is well defined.
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return angular_less(a.s, b.s); });

  // Arcs sharing an endpoint belong to one component; a single cyclic merge
  // at the seam handles chains that wrap past (1,0).
  std::vector<Item> merged;
  Item cur = items[0];
  for (std::size_t k = 1; k < items.size(); ++k) {
    if (items[k].s == cur.e) {
      cur.e = items[k].e;
    } else {
      merged.push_back(cur);
      cur = items[k];
    }
  }
  merged.push_back(cur);
  if (merged.size() > 1 && merged.back().e == merged.front().s) {
    merged.front().s = merged.back().s;
    merged.pop_back();
  }

  bool full = merged.size() == 1 && merged[0].s == merged[0].e && !f.cones.empty();
  std::vector<SupportArc> arcs;
  arcs.reserve(merged.size());
  for (const auto& m : merged) arcs.push_back({m.s, m.e, full});
  return arcs;
}

const char* angle_class_name(AngleClass c) {
  switch (c) {
    case AngleClass::strictly_convex: return "strictly_convex";
    case AngleClass::half_plane: return "half_plane";
    case AngleClass::concave: return "concave";
  }
  return "angle";
}

std::vector<GapComponent> gap_components(const Fan& f) {
  auto arcs = support_arcs(f);
  if (arcs.empty()) fail(Errc::unsupported_fan, "fan has empty support");
  if (arcs.size() == 1 && arcs[0].full_circle) fail(Errc::no_gaps, "fan is complete");
  if (arcs.size() == 1 && arcs[0].is_point())
    fail(Errc::unsupported_fan, "complement of a single ray is not a union of arcs");

  std::vector<GapComponent> gaps;
  gaps.reserve(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    GapComponent g;
    g.from = arcs[i].end;
    g.to = arcs[(i + 1) % arcs.size()].start;
    Coord d = det2(g.from, g.to);
    if (g.to == -g.from) {
      g.angle_class = AngleClass::half_plane;
    } else if (d > 0) {
      g.angle_class = AngleClass::strictly_convex;
      g.type = cone_type(g.from, g.to);
    } else {
      g.angle_class = AngleClass::concave;
    }
    gaps.push_back(std::move(g));
  }
  return gaps;
}

const char* fan_class_name(FanClassKind k) {
  switch (k) {
    case FanClassKind::complete: return "complete";
    case FanClassKind::strictly_convex_hull: return "strictly_convex_hull";
    case FanClassKind::half_plane_hull: return "half_plane_hull";
    case FanClassKind::line_support: return "line_support";
    case FanClassKind::spans_plane: return "spans_plane";
    case FanClassKind::unsupported: return "unsupported";
  }
  return "class";
}

FanClass classify_fan(const Fan& f) {
  if (f.cones.empty()) {
    if (f.rays.empty()) return {FanClassKind::unsupported, "empty fan (torus factor)"};
    if (f.rays.size() == 1) return {FanClassKind::unsupported, "isolated ray (torus factor)"};
    if (f.rays.size() == 2 && f.rays[1] == -f.rays[0]) return {FanClassKind::line_support, ""};
    return {FanClassKind::unsupported, "isolated rays that do not form a line (torus factor)"};
  }
  for (std::size_t i = 0; i < f.rays.size(); ++i)
    if (!f.ray_used(i))
      return {FanClassKind::unsupported, "fan mixes two-dimensional cones with isolated rays"};
  if (is_complete(f)) return {FanClassKind::complete, ""};

  std::size_t concave = 0, half = 0, convex = 0;
  for (const auto& g : gap_components(f)) {
    switch (g.angle_class) {
      case AngleClass::concave: ++concave; break;
      case AngleClass::half_plane: ++half; break;
      case AngleClass::strictly_convex: ++convex; break;
    }
  }
  if (concave == 1 && half == 0) return {FanClassKind::strictly_convex_hull, ""};
  if (half == 1 && concave == 0) return {FanClassKind::half_plane_hull, ""};
  if (concave == 0 && half == 0) return {FanClassKind::spans_plane, ""};
  // Unreachable for valid fans: two gaps of a half turn or more only fit in
  // the line-support case handled above.
  return {FanClassKind::unsupported, "unexpected gap structure"};
}

}  // namespace toricoh
