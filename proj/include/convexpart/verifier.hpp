#pragma once

#include <span>
#include <string>
#include <vector>

#include "convexpart/cover_lines.hpp"
#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

struct SegmentCover;

enum class ViolationCode {
  CrossingEdges,
  NonconvexFace,
  PointInFaceInterior,
  ZeroDegreePoint,
  HullMismatch,
  UncoveredPoint,
  CrossingSegments,
};

const char* code_name(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct VerifyReport {
  bool valid = true;
  std::size_t face_count = 0;
  std::vector<Violation> violations;

  void add(ViolationCode code, std::string detail);
  bool has(ViolationCode code) const;
  // "VALID" or "INVALID", then one "CODE<TAB>detail" line per violation.
  std::string to_text() const;
};

/// Checks that the edges form a convex partition of the point set: no two
/// edges cross or overlap and no edge passes through a point; every point has
/// positive degree; every bounded face is convex (angles of exactly pi are
/// allowed) with no point strictly inside; and the bounded faces add up to the
/// hull area exactly. All arithmetic is exact.
VerifyReport verify_convex_partition(const PointSet& points, std::span<const Edge> edges);

/// Coverage of the target plus pairwise disjoint relative interiors.
VerifyReport verify_segment_cover(const PointSet& points, std::span<const PointId> target,
                                  const SegmentCover& cover);

/// Coverage only; lines may cross.
VerifyReport verify_line_cover(const PointSet& points, std::span<const PointId> target, const LineCover& cover);

}  // namespace convexpart
