#include "toricoh/report.hpp"

#include <charconv>

namespace toricoh {

using nlohmann::ordered_json;

namespace {

Fan make_fan(std::string name, std::vector<LatticeVector> rays, std::vector<ConeRef> cones) {
  Fan f;
  f.name = std::move(name);
  f.rays = std::move(rays);
  f.cones = std::move(cones);
  canonicalize_cones(f);
  return f;
}

}  // namespace

Fan builtin_fan(const std::string& name) {
  if (name == "p2")
    return make_fan("p2", {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  if (name == "p1xp1")
    return make_fan("p1xp1", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  if (name == "c2") return make_fan("c2", {{1, 0}, {0, 1}}, {{0, 1}});
  if (name == "p1xc") return make_fan("p1xc", {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}});
  if (name == "line") return make_fan("line", {{1, 0}, {-1, 0}}, {});
  if (name == "three-quadrants")
    return make_fan("three-quadrants", {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                    {{0, 1}, {1, 2}, {2, 3}});
  if (name.rfind("hirzebruch:", 0) == 0) {
    std::string suffix = name.substr(11);
    Coord a = -1;
    auto [ptr, ec] = std::from_chars(suffix.data(), suffix.data() + suffix.size(), a);
    if (ec != std::errc() || ptr != suffix.data() + suffix.size() || a < 0 || a > 1'000'000)
      fail(Errc::unknown_name, "bad hirzebruch parameter '" + suffix + "'");
    return make_fan(name, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  }
  fail(Errc::unknown_name, "unknown builtin fan '" + name + "'");
}

std::vector<std::string> builtin_corpus() {
  std::vector<std::string> names{"c2", "p2", "p1xp1", "p1xc", "line", "three-quadrants"};
  for (int a = 0; a <= 5; ++a) names.push_back("hirzebruch:" + std::to_string(a));
  return names;
}

namespace {

ordered_json vector_json(LatticeVector v) { return ordered_json::array({v.x, v.y}); }

ordered_json rays_json(const std::vector<LatticeVector>& rays) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rays) arr.push_back(vector_json(r));
  return arr;
}

ordered_json cones_json(const std::vector<ConeRef>& cones) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : cones) arr.push_back(ordered_json::array({c.i, c.j}));
  return arr;
}

ordered_json chain_json(const CurveChain& chain) {
  ordered_json j;
  j["rays"] = rays_json(chain.interior_rays);
  j["self_intersections"] = chain.self_intersections;
  return j;
}

ordered_json input_json(const std::string& label, const Fan& f) {
  ordered_json in;
  in["file"] = label;
  in["name"] = f.name.empty() ? ordered_json() : ordered_json(f.name);
  in["rays"] = rays_json(f.rays);
  in["cones"] = cones_json(f.cones);
  return in;
}

ordered_json gap_json(const GapRow& row) {
  ordered_json g;
  g["from"] = vector_json(row.gap.from);
  g["to"] = vector_json(row.gap.to);
  g["angle_class"] = angle_class_name(row.gap.angle_class);
  if (row.gap.type) {
    ordered_json t;
    t["p"] = row.gap.type->p;
    t["q"] = row.gap.type->q;
    g["type"] = t;
  } else {
    g["type"] = nullptr;
  }
  g["chain"] = row.chain ? chain_json(*row.chain) : ordered_json(nullptr);
  return g;
}

ordered_json summand_json(const Summand& s) {
  ordered_json j;
  j["kind"] = s.kind == SummandKind::monomial_cone ? "monomial_cone" : "half_line_series";
  j["p"] = s.type ? ordered_json(s.type->p) : ordered_json(nullptr);
  j["q"] = s.type ? ordered_json(s.type->q) : ordered_json(nullptr);
  j["source"] = s.source;
  j["text"] = summand_text(s);
  return j;
}

}  // namespace

ordered_json analysis_json(const std::string& input_label, const Fan& f,
                           const AnalyzeOptions& opts) {
  ordered_json doc;
  doc["input"] = input_json(input_label, f);

  auto validation = validate_fan(f);
  {
    ordered_json v;
    v["ok"] = validation.ok();
    ordered_json lines = ordered_json::array();
    for (const auto& viol : validation.violations) lines.push_back(viol.to_line());
    v["violations"] = lines;
    doc["validation"] = v;
  }

  CohomologyReport rep = cohomology_report(f);
  doc["classification"] = fan_class_name(rep.fan_class.kind);

  ordered_json gaps = ordered_json::array();
  for (const auto& row : rep.gaps) gaps.push_back(gap_json(row));
  doc["gaps"] = gaps;

  {
    ordered_json coh;
    coh["h0"] = ordered_json{{"dim", rep.h0_dim}};
    ordered_json summands = ordered_json::array();
    for (const auto& s : rep.h1) summands.push_back(summand_json(s));
    coh["h1"] = ordered_json{{"summands", summands}};
    coh["h2"] = ordered_json{{"dim", rep.h2_dim}};
    doc["cohomology"] = coh;
  }

  Completion comp = complete_fan(f);
  {
    ordered_json c;
    c["added_rays"] = rays_json(comp.added_rays);
    c["cones"] = cones_json(comp.completed_fan.cones);
    doc["completion"] = c;
  }

  if (opts.max_degree) {
    ordered_json table = ordered_json::array();
    for (const auto& s : rep.h1) {
      ordered_json row;
      row["summand"] = summand_text(s);
      std::vector<Coord> dims;
      for (Coord d = 0; d <= *opts.max_degree; ++d) dims.push_back(graded_dim(s, d));
      row["dims"] = dims;
      table.push_back(row);
    }
    doc["graded_dims"] = table;
  }
  return doc;
}

std::string analysis_text(const std::string& input_label, const Fan& f,
                          const AnalyzeOptions& opts) {
  std::string out;
  out += "input: " + input_label + "\n";
  out += "name: " + (f.name.empty() ? std::string("(unnamed)") : f.name) + "\n";

  auto validation = validate_fan(f);
  out += "validation: " + std::string(validation.ok() ? "ok" : "invalid") + "\n";
  for (const auto& viol : validation.violations) out += "  " + viol.to_line() + "\n";

  CohomologyReport rep = cohomology_report(f);
  out += "classification: " + std::string(fan_class_name(rep.fan_class.kind)) + "\n";

  if (rep.gaps.empty()) {
    out += "gaps: (none)\n";
  } else {
    out += "gaps:\n";
    for (std::size_t i = 0; i < rep.gaps.size(); ++i) {
      const auto& row = rep.gaps[i];
      out += "  gap " + std::to_string(i) + ": " + to_string(row.gap.from) + " -> " +
             to_string(row.gap.to) + "  " + angle_class_name(row.gap.angle_class);
      if (row.gap.type)
        out += "  type (" + std::to_string(row.gap.type->p) + "," +
               std::to_string(row.gap.type->q) + ")";
      if (row.chain) {
        out += "  chain rays [";
        for (std::size_t k = 0; k < row.chain->interior_rays.size(); ++k)
          out += (k ? ", " : "") + to_string(row.chain->interior_rays[k]);
        out += "]  self-intersections [";
        for (std::size_t k = 0; k < row.chain->self_intersections.size(); ++k)
          out += (k ? ", " : "") + std::to_string(row.chain->self_intersections[k]);
        out += "]";
      }
      out += "\n";
    }
  }

  Completion comp = complete_fan(f);
  if (comp.added_rays.empty()) {
    out += "completion: no rays added\n";
  } else {
    out += "completion: added rays";
    for (const auto& r : comp.added_rays) out += " " + to_string(r);
    out += "\n";
  }

  out += "H0_c = " + std::string(rep.h0_dim == 1 ? "C" : "0") + "\n";
  if (rep.h1.empty()) {
    out += "H1_c = 0\n";
  } else {
    out += "H1_c = ";
    for (std::size_t i = 0; i < rep.h1.size(); ++i)
      out += (i ? " ⊕ " : "") + summand_text(rep.h1[i]);
    out += "\n";
  }
  out += "H2_c = 0\n";

  if (opts.max_degree) {
    out += "graded dimensions (d = 0.." + std::to_string(*opts.max_degree) + "):\n";
    for (const auto& s : rep.h1) {
      out += "  " + summand_text(s) + ":";
      for (Coord d = 0; d <= *opts.max_degree; ++d)
        out += " " + std::to_string(graded_dim(s, d));
      out += "\n";
    }
  }
  return out;
}

ordered_json completion_json(const std::string& input_label, const Fan& f) {
  Completion comp = complete_fan(f);
  ordered_json doc;
  doc["input"] = input_json(input_label, f);
  doc["classification"] = fan_class_name(classify_fan(f).kind);
  doc["added_rays"] = rays_json(comp.added_rays);
  doc["cones"] = cones_json(comp.completed_fan.cones);
  ordered_json gaps = ordered_json::array();
  for (std::size_t i = 0; i < comp.gaps.size(); ++i) {
    ordered_json g;
    g["from"] = vector_json(comp.gaps[i].from);
    g["to"] = vector_json(comp.gaps[i].to);
    g["angle_class"] = angle_class_name(comp.gaps[i].angle_class);
    g["split_rays"] = rays_json(comp.resolutions[i].split_rays);
    ordered_json chains = ordered_json::array();
    for (const auto& chain : comp.resolutions[i].piece_chains) chains.push_back(chain_json(chain));
    g["chains"] = chains;
    gaps.push_back(g);
  }
  doc["gaps"] = gaps;
  return doc;
}

}  // namespace toricoh
