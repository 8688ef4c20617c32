#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "convexpart/cover_lines.hpp"
#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

struct InstanceFile {
  std::string name;
  PointSet points;
  std::vector<std::pair<std::string, std::string>> meta;  // written as "# key=value"
  std::vector<std::string> comments;                       // written as "# text"

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

/// Perturbed 2k x (2k+1) grid at scale M = 4k^2. Even rows stay collinear
/// with row-dependent slopes, odd rows get hashed offsets below M/2, columns
/// stay vertical. The result is checked to have exactly 2k+1 lines of 2k
/// points, k lines of 2k+1 points and no other line through three points; the
/// scale doubles on failure and ConstructionFailed is thrown after 12 tries.
PointSet gen_adversarial_grid(int k);

// The grid plus three far points so that the whole grid is inner.
PointSet gen_adversarial_grid_enclosed(int k);

/// Seven hull points around m inner points on the chord between hull points
/// 0 and 1. The optimum is two faces for every m.
PointSet gen_collinear_fan(int m);
// Two-face partition of gen_collinear_fan(m): hull ring plus the chord chain.
std::vector<Edge> collinear_fan_witness(int m);

/// Seeded uniform points; with probability `collinearity_bias` a new point is
/// snapped onto the line through two existing points. `coord_range` 0 picks
/// a range from n.
PointSet gen_random(std::size_t n, std::uint64_t seed, double collinearity_bias, std::int64_t coord_range = 0);

// Known fixture names: fig1 (collinear fan, m = 5), fig2_left, fig10.
std::vector<std::string> fixture_names();
PointSet fixture(const std::string& name);

InstanceFile parse_instance(std::istream& in);
InstanceFile read_instance(const std::string& path);
void write_instance(std::ostream& out, const InstanceFile& inst);
void write_instance(const std::string& path, const InstanceFile& inst);

struct Solution {
  std::vector<Edge> edges;                            // "edge i j"
  std::vector<std::pair<PointId, PointId>> segments;  // "seg i j"
  std::vector<Line> lines;                            // "line a b c"

  friend bool operator==(const Solution& a, const Solution& b);
};

Solution parse_solution(std::istream& in);
Solution read_solution(const std::string& path);
void write_solution(std::ostream& out, const Solution& sol);
void write_solution(const std::string& path, const Solution& sol);

/// SVG drawing: 1 unit = 4 px, faces filled from a rotating palette, edges as
/// lines, points as 3 px dots.
std::string render_svg(const PointSet& points, std::span<const Edge> edges,
                       std::span<const std::vector<PointId>> faces);

}  // namespace convexpart
