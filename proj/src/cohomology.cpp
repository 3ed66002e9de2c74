#include "toricoh/cohomology.hpp"

namespace toricoh {

CohomologyReport cohomology_report(const Fan& f) {
  FanClass cls = classify_fan(f);
  if (cls.kind == FanClassKind::unsupported) fail(Errc::unsupported_fan, cls.reason);

  CohomologyReport rep;
  rep.fan_class = cls;
  rep.h2_dim = 0;
  if (cls.kind == FanClassKind::complete) {
    rep.h0_dim = 1;
    return rep;
  }
  rep.h0_dim = 0;

  auto gaps = gap_components(f);
  for (const auto& g : gaps) {
    GapRow row{g, std::nullopt};
    if (g.angle_class == AngleClass::strictly_convex) row.chain = curve_chain(g);
    rep.gaps.push_back(std::move(row));
  }

  auto add_cone_summand = [&](std::size_t i) {
    Summand s;
    s.kind = SummandKind::monomial_cone;
    s.type = gaps[i].type;
    s.source = "gap " + std::to_string(i);
    s.gap_index = i;
    rep.h1.push_back(std::move(s));
  };
  auto add_half_line = [&](std::string variable, std::string source) {
    Summand s;
    s.kind = SummandKind::half_line_series;
    s.variable = std::move(variable);
    s.source = std::move(source);
    rep.h1.push_back(std::move(s));
  };

  switch (cls.kind) {
    case FanClassKind::strictly_convex_hull:
    case FanClassKind::spans_plane:
      // One monomial-cone space per strictly convex boundary component; a
      // concave component contributes nothing.
      for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i].angle_class == AngleClass::strictly_convex) add_cone_summand(i);
      break;
    case FanClassKind::half_plane_hull:
      // The half-plane hull contributes one half-line series on top of the
      // strictly convex components.
      add_half_line("z", "half-plane factor");
      for (std::size_t i = 0; i < gaps.size(); ++i)
        if (gaps[i].angle_class == AngleClass::strictly_convex) add_cone_summand(i);
      break;
    case FanClassKind::line_support:
      add_half_line("z", "line factor +");
      add_half_line("1/z", "line factor -");
      break;
    default:
      break;
  }
  return rep;
}

Coord graded_dim(const Summand& s, Coord degree) {
  if (degree <= 0) return 0;
  if (s.kind == SummandKind::half_line_series) return 1;
  Coord p = s.type->p, q = s.type->q;
  // Count of s in [0, d] with p*(d-s) >= q*s, i.e. s <= p*d/(p+q).
  return checked_mul(p, degree) / checked_add(p, q) + 1;
}

std::string summand_text(const Summand& s) {
  if (s.kind == SummandKind::half_line_series)
    return s.variable == "1/z" ? "{ Σ_{s>0} a_s z^-s }" : "{ Σ_{s>0} a_s z^s }";
  return "{ Σ_{(s,t)>(0,0)} a_st z^s w^t : " + std::to_string(s.type->p) + "t >= " +
         std::to_string(s.type->q) + "s }";
}

}  // namespace toricoh
