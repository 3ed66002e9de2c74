#pragma once

#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <utility>
#include <vector>

#include "toricoh/report.hpp"

// Shared helpers for the test binaries: seeded random generators for fans,
// primitive vectors and basis changes, plus a tiny subprocess runner for the
// CLI round trips.
namespace toricoh::testing {

inline LatticeVector random_primitive(std::mt19937& rng, Coord max_coord = 12) {
  std::uniform_int_distribution<Coord> pick(-max_coord, max_coord);
  for (;;) {
    LatticeVector v{pick(rng), pick(rng)};
    if (v.is_zero()) continue;
    return primitive(v);
  }
}

// Primitive ccw pair spanning a strictly convex cone.
inline std::pair<LatticeVector, LatticeVector> random_convex_pair(std::mt19937& rng,
                                                                  Coord max_coord = 12) {
  for (;;) {
    LatticeVector v = random_primitive(rng, max_coord);
    LatticeVector w = random_primitive(rng, max_coord);
    if (det2(v, w) > 0) return {v, w};
  }
}

inline Mat2 random_unimodular(std::mt19937& rng, Coord max_entry = 10) {
  std::uniform_int_distribution<Coord> pick(-max_entry, max_entry);
  for (;;) {
    Mat2 m{pick(rng), pick(rng), pick(rng), pick(rng)};
    if (m.det() == 1) return m;
  }
}

// Random valid smooth fan: star-subdivide a complete smooth seed, then
// usually delete some cones (dropping unused rays). Mixes in the line fan
// and untouched complete fans for class variety.
inline Fan random_smooth_fan(std::mt19937& rng) {
  std::uniform_int_distribution<int> pct(0, 99);
  if (pct(rng) < 3) {
    Fan line = builtin_fan("line");
    line.name.clear();
    return line;
  }

  Fan f = builtin_fan(pct(rng) < 50 ? "p2" : "p1xp1");
  f.name.clear();
  std::uniform_int_distribution<int> subdivisions(0, 10);
  int rounds = subdivisions(rng);
  for (int k = 0; k < rounds; ++k) {
    std::uniform_int_distribution<std::size_t> pick_cone(0, f.cones.size() - 1);
    std::size_t ci = pick_cone(rng);
    auto [i, j] = f.cones[ci];
    LatticeVector u = f.rays[i] + f.rays[j];
    std::size_t ui = f.rays.size();
    f.rays.push_back(u);
    f.cones[ci] = {i, ui};
    f.cones.push_back({ui, j});
  }
  if (pct(rng) < 10) {
    canonicalize_cones(f);
    return f;
  }

  std::vector<ConeRef> kept;
  for (const auto& c : f.cones)
    if (pct(rng) < 70) kept.push_back(c);
  std::uniform_int_distribution<std::size_t> pick_any(0, f.cones.size() - 1);
  if (kept.empty()) kept.push_back(f.cones[pick_any(rng)]);
  if (kept.size() == f.cones.size())
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pick_any(rng) % kept.size()));

  Fan g;
  std::vector<std::size_t> remap(f.rays.size(), SIZE_MAX);
  for (const auto& c : kept)
    for (std::size_t idx : {c.i, c.j})
      if (remap[idx] == SIZE_MAX) {
        remap[idx] = g.rays.size();
        g.rays.push_back(f.rays[idx]);
      }
  for (const auto& c : kept) g.cones.push_back({remap[c.i], remap[c.j]});
  canonicalize_cones(g);
  return g;
}

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs a shell command, capturing stdout (stderr goes wherever redirected).
inline RunResult run_command(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed: " + command);
  std::string output;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, n);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

inline std::string cli_path() { return TORICOH_BIN; }
inline std::string golden_dir() { return TORICOH_GOLDEN_DIR; }

}  // namespace toricoh::testing
