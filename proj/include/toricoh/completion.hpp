#pragma once

#include <string>
#include <vector>

#include "toricoh/classify.hpp"

namespace toricoh {

// How one gap was filled: rays that split a gap of a half turn or more into
// strictly convex pieces, then the minimal smooth chain of each piece, all
// in ccw order.
struct GapResolution {
  std::vector<LatticeVector> split_rays;
  std::vector<CurveChain> piece_chains;
};

struct Completion {
  Fan completed_fan;                       // input rays first, added rays appended
  std::vector<GapComponent> gaps;          // ccw, as reported by gap_components
  std::vector<GapResolution> resolutions;  // aligned with gaps
  std::vector<LatticeVector> added_rays;   // in ray-list order
};

// Embeds the fan in a complete smooth fan. Strictly convex gaps get their
// minimal smooth subdivision; a half-plane gap is first split by the ccw
// perpendicular of its start ray; a concave gap by the negations of its two
// boundary rays. Unsupported fans are rejected.
Completion complete_fan(const Fan& f);

// Exceptional chain filling a strictly convex gap.
CurveChain curve_chain(const GapComponent& g);

// Fan file text of the completed fan; appended rays carry an "# added" tag.
std::string serialize_completion(const Completion& c);

}  // namespace toricoh
