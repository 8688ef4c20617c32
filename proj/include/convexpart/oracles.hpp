#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convexpart/cover_segments.hpp"
#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

inline constexpr std::size_t kExactMcpGuard = 8;
inline constexpr std::size_t kExactSegmentCoverGuard = 12;

struct OracleResult {
  std::size_t optimum = 0;
  std::vector<Edge> edges;   // exact_mcp witness
  SegmentCover segments;     // exact_segment_cover witness
  std::uint64_t explored = 0;
  bool budget_hit = false;   // optimum is then only an upper bound
};

/// Minimum convex partition by branch and bound. A partition is complete when
/// every inner point has all angular gaps between its edges at most pi; the
/// search branches on a deficient point over the edges that split its largest
/// gap. Throws GuardExceeded above 8 points and AllCollinear.
/// `node_budget` = 0 means unlimited.
OracleResult exact_mcp(const PointSet& points, std::uint64_t node_budget = 0);

/// Minimum non-crossing segment cover of the target over contiguous collinear
/// runs and point-segments. Throws GuardExceeded above 12 target points.
OracleResult exact_segment_cover(const PointSet& points, std::span<const PointId> target,
                                 std::uint64_t node_budget = 0);

}  // namespace convexpart
