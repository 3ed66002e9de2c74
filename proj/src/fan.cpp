#include "toricoh/fan.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <tuple>

namespace toricoh {

namespace {

// Keeps every det2 of file-sourced vectors far away from the int64 edge.
constexpr Coord kMaxFileCoord = 1'000'000'000;

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(std::move(tok));
  return out;
}

Coord parse_coord(const std::string& tok, int lineno) {
  Coord value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
  if (value > kMaxFileCoord || value < -kMaxFileCoord)
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": coordinate " + tok + " out of range");
  return value;
}

std::size_t parse_index(const std::string& tok, int lineno) {
  Coord value = parse_coord(tok, lineno);
  if (value < 0)
    fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": ray index must be nonnegative");
  return static_cast<std::size_t>(value);
}

}  // namespace

Cone2 Fan::cone(std::size_t k) const { return {rays.at(cones.at(k).i), rays.at(cones.at(k).j)}; }

std::optional<std::size_t> Fan::ray_index(LatticeVector r) const {
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == r) return i;
  return std::nullopt;
}

bool Fan::ray_used(std::size_t ray) const {
  for (const auto& c : cones)
    if (c.i == ray || c.j == ray) return true;
  return false;
}

void canonicalize_cones(Fan& f) {
  for (auto& c : f.cones) {
    if (c.i < f.rays.size() && c.j < f.rays.size() && det2(f.rays[c.i], f.rays[c.j]) < 0)
      std::swap(c.i, c.j);
  }
  std::sort(f.cones.begin(), f.cones.end(), [&](const ConeRef& a, const ConeRef& b) {
    if (a.i < f.rays.size() && a.j < f.rays.size() && b.i < f.rays.size() && b.j < f.rays.size()) {
      Ordering s = angular_compare(f.rays[a.i], f.rays[b.i]);
      if (s != Ordering::equal) return s == Ordering::less;
      Ordering e = angular_compare(f.rays[a.j], f.rays[b.j]);
      if (e != Ordering::equal) return e == Ordering::less;
    }
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
}

Fan parse_fan(std::istream& in) {
  Fan f;
  bool named = false;
  struct RawCone {
    std::size_t i, j;
    int lineno;
  };
  std::vector<RawCone> raw_cones;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "ray") {
      if (tok.size() != 3)
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'ray <x> <y>'");
      LatticeVector v{parse_coord(tok[1], lineno), parse_coord(tok[2], lineno)};
      if (v.is_zero())
        fail(Errc::zero_ray, "line " + std::to_string(lineno) + ": ray (0,0) spans no direction");
      if (!is_primitive(v))
        fail(Errc::non_primitive_ray,
             "line " + std::to_string(lineno) + ": ray " + to_string(v) + " is not primitive");
      if (f.ray_index(v))
        fail(Errc::duplicate_ray,
             "line " + std::to_string(lineno) + ": ray " + to_string(v) + " already declared");
      f.rays.push_back(v);
    } else if (tok[0] == "cone") {
      if (tok.size() != 3)
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'cone <i> <j>'");
      raw_cones.push_back({parse_index(tok[1], lineno), parse_index(tok[2], lineno), lineno});
    } else if (tok[0] == "name") {
      if (tok.size() != 2)
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": expected 'name <label>'");
      if (named)
        fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": 'name' given twice");
      f.name = tok[1];
      named = true;
    } else {
      fail(Errc::syntax_error,
           "line " + std::to_string(lineno) + ": unknown directive '" + tok[0] + "'");
    }
  }

  for (const auto& rc : raw_cones) {
    if (rc.i >= f.rays.size() || rc.j >= f.rays.size())
      fail(Errc::bad_index, "line " + std::to_string(rc.lineno) + ": cone references ray " +
                                std::to_string(std::max(rc.i, rc.j)) + " but only " +
                                std::to_string(f.rays.size()) + " rays are declared");
    Coord d = det2(f.rays[rc.i], f.rays[rc.j]);
    if (d == 0)
      fail(Errc::antipodal_cone, "line " + std::to_string(rc.lineno) + ": rays " +
                                     to_string(f.rays[rc.i]) + " and " + to_string(f.rays[rc.j]) +
                                     " span no two-dimensional cone");
    f.cones.push_back({rc.i, rc.j});
  }

  canonicalize_cones(f);
  return f;
}

Fan parse_fan(const std::string& text) {
  std::istringstream in(text);
  return parse_fan(in);
}

std::string serialize_fan(const Fan& f) {
  Fan sorted = f;
  canonicalize_cones(sorted);
  std::string out;
  if (!sorted.name.empty()) out += "name " + sorted.name + "\n";
  for (const auto& r : sorted.rays)
    out += "ray " + std::to_string(r.x) + " " + std::to_string(r.y) + "\n";
  for (const auto& c : sorted.cones)
    out += "cone " + std::to_string(c.i) + " " + std::to_string(c.j) + "\n";
  return out;
}

const char* violation_kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::zero_ray: return "ZeroRay";
    case ViolationKind::non_primitive_ray: return "NonPrimitiveRay";
    case ViolationKind::duplicate_ray: return "DuplicateRay";
    case ViolationKind::bad_index: return "BadIndex";
    case ViolationKind::degenerate_cone: return "DegenerateCone";
    case ViolationKind::misoriented_cone: return "MisorientedCone";
    case ViolationKind::singular_cone: return "SingularCone";
    case ViolationKind::overlapping_cones: return "OverlappingCones";
  }
  return "Violation";
}

std::string Violation::to_line() const {
  return std::string(violation_kind_name(kind)) + ": " + detail;
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport report;
  auto add = [&](ViolationKind k, std::string detail) {
    report.violations.push_back({k, std::move(detail)});
  };

  bool rays_usable = true;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const auto v = f.rays[i];
    if (v.is_zero()) {
      add(ViolationKind::zero_ray, "ray " + std::to_string(i) + " is (0,0)");
      rays_usable = false;
      continue;
    }
    if (!is_primitive(v)) {
      add(ViolationKind::non_primitive_ray,
          "ray " + std::to_string(i) + " = " + to_string(v) + " is not primitive");
      rays_usable = false;
    }
    for (std::size_t j = 0; j < i; ++j)
      if (f.rays[j] == v)
        add(ViolationKind::duplicate_ray,
            "ray " + std::to_string(i) + " repeats ray " + std::to_string(j) + " = " + to_string(v));
  }

  std::vector<ConeRef> usable;
  for (std::size_t k = 0; k < f.cones.size(); ++k) {
    const auto c = f.cones[k];
    if (c.i >= f.rays.size() || c.j >= f.rays.size()) {
      add(ViolationKind::bad_index,
          "cone " + std::to_string(k) + " references a ray index out of range");
      continue;
    }
    if (!rays_usable) continue;
    Coord d = det2(f.rays[c.i], f.rays[c.j]);
    if (d == 0) {
      add(ViolationKind::degenerate_cone,
          "cone (" + to_string(f.rays[c.i]) + "," + to_string(f.rays[c.j]) +
              ") has determinant 0");
      continue;
    }
    if (d < 0) {
      add(ViolationKind::misoriented_cone,
          "cone (" + to_string(f.rays[c.i]) + "," + to_string(f.rays[c.j]) +
              ") is clockwise (determinant " + std::to_string(d) + ")");
      continue;
    }
    if (d > 1)
      add(ViolationKind::singular_cone,
          "cone (" + to_string(f.rays[c.i]) + "," + to_string(f.rays[c.j]) +
              ") has determinant " + std::to_string(d));
    usable.push_back(c);
  }

  if (!rays_usable) return report;

  // Two closed arcs intersect beyond shared endpoints iff one contains the
  // other's start strictly inside, or the starts coincide.
  for (std::size_t a = 0; a < usable.size(); ++a) {
    for (std::size_t b = a + 1; b < usable.size(); ++b) {
      auto va = f.rays[usable[a].i], wa = f.rays[usable[a].j];
      auto vb = f.rays[usable[b].i], wb = f.rays[usable[b].j];
      if (va == vb || ccw_between(va, wa, vb) || ccw_between(vb, wb, va))
        add(ViolationKind::overlapping_cones,
            "cones (" + to_string(va) + "," + to_string(wa) + ") and (" + to_string(vb) + "," +
                to_string(wb) + ") share interior directions");
    }
  }

  // A ray is a one-dimensional cone of the fan; its interior may not meet a
  // two-dimensional cone's interior either.
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    if (f.ray_used(i)) continue;
    for (const auto& c : usable)
      if (ccw_between(f.rays[c.i], f.rays[c.j], f.rays[i]))
        add(ViolationKind::overlapping_cones,
            "ray " + to_string(f.rays[i]) + " lies inside cone (" + to_string(f.rays[c.i]) + "," +
                to_string(f.rays[c.j]) + ")");
  }

  return report;
}

bool is_smooth_cone(const Cone2& c) { return det2(c.v, c.w) == 1; }

bool is_complete(const Fan& f) {
  if (f.cones.empty()) return false;
  std::vector<std::size_t> order(f.cones.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angular_less(f.rays[f.cones[a].i], f.rays[f.cones[b].i]);
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& cur = f.cones[order[k]];
    const auto& next = f.cones[order[(k + 1) % order.size()]];
    if (f.rays[cur.j] != f.rays[next.i]) return false;
  }
  return true;
}

Coord Mat2::det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }

LatticeVector Mat2::apply(LatticeVector v) const {
  return {checked_add(checked_mul(a, v.x), checked_mul(b, v.y)),
          checked_add(checked_mul(c, v.x), checked_mul(d, v.y))};
}

Fan apply_unimodular(const Fan& f, const Mat2& m) {
  if (m.det() != 1)
    fail(Errc::not_unimodular, "matrix has determinant " + std::to_string(m.det()));
  Fan out = f;
  for (auto& r : out.rays) r = m.apply(r);
  canonicalize_cones(out);
  return out;
}

}  // namespace toricoh
