#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toricoh/completion.hpp"

namespace toricoh {

enum class SummandKind { monomial_cone, half_line_series };

// One direct summand of the degree-one compactly supported cohomology with
// structure-sheaf coefficients:
//   monomial_cone(p,q)  series sum a_st z^s w^t over (s,t) >= (0,0), not both
//                       zero, subject to p*t >= q*s
//   half_line_series    series sum a_s z^s over s > 0 in one variable
struct Summand {
  SummandKind kind{};
  std::optional<ConeType> type;          // monomial cones only
  std::string variable;                  // half-line series: "z" or "1/z"
  std::string source;                    // "gap <i>", "half-plane factor", "line factor +/-"
  std::optional<std::size_t> gap_index;  // set for monomial cones

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct GapRow {
  GapComponent gap;
  std::optional<CurveChain> chain;  // present iff strictly convex
};

struct CohomologyReport {
  int h0_dim = 0;  // 1 exactly for complete fans
  std::vector<Summand> h1;
  int h2_dim = 0;  // always 0
  FanClass fan_class;
  std::vector<GapRow> gaps;
};

// Compactly supported cohomology of the toric surface of a valid smooth fan.
// The degree-one group is the direct sum of the listed summands; unsupported
// fans are rejected.
CohomologyReport cohomology_report(const Fan& f);

// Dimension of the degree-d graded piece of a summand (total degree s+t for
// monomial cones). Closed form, no enumeration.
Coord graded_dim(const Summand& s, Coord degree);

// Display form, e.g. "{ Σ_{(s,t)>(0,0)} a_st z^s w^t : 2t >= 1s }".
std::string summand_text(const Summand& s);

}  // namespace toricoh
