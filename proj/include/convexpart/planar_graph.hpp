#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "convexpart/geom_core.hpp"

namespace convexpart {

// Twice-area accumulator; polygon areas can exceed 128 bits in aggregate.
using Area = boost::multiprecision::int256_t;

struct Edge {
  PointId u = 0;
  PointId v = 0;

  static Edge make(PointId a, PointId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Splits every edge at the points of `points` lying in its open interior and
/// removes duplicates and self-loops. The result describes the same drawing.
std::vector<Edge> normalize_edges(const PointSet& points, std::span<const Edge> edges);

// Twice the signed area of the polygon (positive when counterclockwise).
Area twice_signed_area(const PointSet& points, std::span<const PointId> polygon);

struct FaceCycle {
  std::vector<PointId> vertices;
  Area twice_area = 0;
};

/// Walks every face boundary of the straight-line drawing (face on the left of
/// each half-edge). Bounded faces come out counterclockwise with positive
/// area; the unbounded face of each component has non-positive area.
std::vector<FaceCycle> extract_faces(const PointSet& points, std::span<const Edge> edges);

// Bounded faces only (positive area).
std::vector<std::vector<PointId>> bounded_faces(const PointSet& points, std::span<const Edge> edges);

}  // namespace convexpart
