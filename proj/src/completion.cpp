#include "toricoh/completion.hpp"

namespace toricoh {

CurveChain curve_chain(const GapComponent& g) {
  if (g.angle_class != AngleClass::strictly_convex)
    fail(Errc::not_strictly_convex, "gap from " + to_string(g.from) + " to " + to_string(g.to) +
                                        " is not strictly convex");
  return smooth_subdivide(g.from, g.to);
}

Completion complete_fan(const Fan& f) {
  FanClass cls = classify_fan(f);
  if (cls.kind == FanClassKind::unsupported) fail(Errc::unsupported_fan, cls.reason);

  Completion out;
  out.completed_fan = f;
  if (cls.kind == FanClassKind::complete) return out;

  out.gaps = gap_components(f);
  Fan& result = out.completed_fan;

  auto index_of = [&](LatticeVector u) {
    if (auto idx = result.ray_index(u)) return *idx;
    result.rays.push_back(u);
    out.added_rays.push_back(u);
    return result.rays.size() - 1;
  };

  for (const auto& gap : out.gaps) {
    GapResolution res;
    std::vector<LatticeVector> anchors{gap.from};
    switch (gap.angle_class) {
      case AngleClass::strictly_convex:
        break;
      case AngleClass::half_plane:
        res.split_rays = {perp_ccw(gap.from)};
        break;
      case AngleClass::concave:
        // Both negations sit strictly inside a gap wider than a half turn,
        // -to first in ccw order.
        res.split_rays = {-gap.to, -gap.from};
        break;
    }
    anchors.insert(anchors.end(), res.split_rays.begin(), res.split_rays.end());
    anchors.push_back(gap.to);

    for (std::size_t a = 0; a + 1 < anchors.size(); ++a) {
      CurveChain chain = smooth_subdivide(anchors[a], anchors[a + 1]);
      std::size_t prev = index_of(anchors[a]);
      for (const auto& ray : chain.interior_rays) {
        std::size_t cur = index_of(ray);
        result.cones.push_back({prev, cur});
        prev = cur;
      }
      result.cones.push_back({prev, index_of(anchors[a + 1])});
      res.piece_chains.push_back(std::move(chain));
    }
    out.resolutions.push_back(std::move(res));
  }

  canonicalize_cones(result);
  return out;
}

std::string serialize_completion(const Completion& c) {
  Fan sorted = c.completed_fan;
  canonicalize_cones(sorted);
  std::size_t original = sorted.rays.size() - c.added_rays.size();
  std::string out;
  if (!sorted.name.empty()) out += "name " + sorted.name + "\n";
  for (std::size_t i = 0; i < sorted.rays.size(); ++i) {
    out += "ray " + std::to_string(sorted.rays[i].x) + " " + std::to_string(sorted.rays[i].y);
    if (i >= original) out += " # added";
    out += "\n";
  }
  for (const auto& cone : sorted.cones)
    out += "cone " + std::to_string(cone.i) + " " + std::to_string(cone.j) + "\n";
  return out;
}

}  // namespace toricoh
