#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricoh/fan.hpp"
#include "toricoh/resolve.hpp"

namespace toricoh {

// Maximal connected component of the union of the closed cones and isolated
// rays, as a closed ccw arc of directions. start == end is either a single
// isolated ray (point) or, with full_circle set, the whole circle.
struct SupportArc {
  LatticeVector start;
  LatticeVector end;
  bool full_circle = false;

  bool is_point() const { return !full_circle && start == end; }
  friend bool operator==(const SupportArc&, const SupportArc&) = default;
};

// Requires a valid fan. Arcs come back sorted ccw by start ray.
std::vector<SupportArc> support_arcs(const Fan& f);

enum class AngleClass { strictly_convex, half_plane, concave };
const char* angle_class_name(AngleClass c);

// Connected component of the complement of the support: the open ccw arc
// from one support arc's end to the next one's start.
struct GapComponent {
  LatticeVector from;
  LatticeVector to;
  AngleClass angle_class{};
  std::optional<ConeType> type;  // present iff strictly_convex

  friend bool operator==(const GapComponent&, const GapComponent&) = default;
};

// Requires a valid, non-complete fan; gaps are listed ccw. Complete fans
// raise NoGaps. At most one gap is wider than a strict half turn; only the
// two-antipodal-rays fan has two half-plane gaps.
std::vector<GapComponent> gap_components(const Fan& f);

enum class FanClassKind {
  complete,
  strictly_convex_hull,
  half_plane_hull,
  line_support,
  spans_plane,
  unsupported,
};

const char* fan_class_name(FanClassKind k);

struct FanClass {
  FanClassKind kind{};
  std::string reason;  // set iff unsupported

  friend bool operator==(const FanClass&, const FanClass&) = default;
};

// Shape of the fan's support, which determines the cohomology assembly:
//   complete             no gaps
//   strictly_convex_hull exactly one concave gap, the rest strictly convex
//   half_plane_hull      exactly one half-plane gap, the rest strictly convex
//   line_support         no 2D cones, exactly the rays {r, -r}
//   spans_plane          every gap strictly convex
// Fans with a torus factor (no 2D cone and not the line above) and fans
// mixing 2D cones with isolated rays are unsupported.
FanClass classify_fan(const Fan& f);

}  // namespace toricoh
