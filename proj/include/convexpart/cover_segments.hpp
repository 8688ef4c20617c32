#pragma once

#include <span>
#include <vector>

#include "convexpart/cover_lines.hpp"
#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

/// Closed segment between two points of the set; u == v is the point-segment.
/// `covered` lists the target points on the closed segment, in order from u.
struct Segment {
  PointId u = 0;
  PointId v = 0;
  std::vector<PointId> covered;

  bool degenerate() const { return u == v; }
};

struct SegmentCover {
  std::vector<Segment> segments;
  std::size_t s() const { return segments.size(); }
};

/// True when the relative interiors of [a1, a2] and [b1, b2] intersect. The
/// relative interior of a point-segment is the point itself; that of a proper
/// segment is the open segment.
bool relative_interiors_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

inline bool segments_cross(const PointSet& points, const Segment& s, const Segment& t) {
  return relative_interiors_intersect(points[s.u], points[s.v], points[t.u], points[t.v]);
}

// Segment [u, v] with its covered list computed against the target.
Segment make_segment(const PointSet& points, std::span<const PointId> target, PointId u, PointId v);

/// Greedy non-crossing segment cover: repeatedly takes the candidate that
/// covers the most uncovered points among those crossing no chosen segment.
/// Candidates are the contiguous runs of target points on every line through
/// two of them, plus every point-segment. Collinear chosen segments that share
/// an endpoint are merged afterwards when the merge stays non-crossing.
SegmentCover greedy_segment_cover(const PointSet& points, std::span<const PointId> target);

struct SegmentConversion {
  SegmentCover cover;
  std::size_t pieces = 0;         // bounded pieces cut from the lines
  std::size_t removed_pairs = 0;  // crossing pairs dropped
  std::size_t before_repair = 0;  // segments after merging, before orphan repair
  std::size_t orphans = 0;        // point-segments added for uncovered points
};

/// Cuts each cover line at its target points, drops crossing pieces pairwise,
/// merges collinear neighbours and re-covers orphaned points with
/// point-segments.
SegmentConversion lines_to_segments_detailed(const PointSet& points, std::span<const PointId> target,
                                             const LineCover& cover);
SegmentCover lines_to_noncrossing_segments(const PointSet& points, std::span<const PointId> target,
                                           const LineCover& cover);

/// Non-crossing cover of the inner points extracted from a valid convex
/// partition of a non-special set: aligned inner-inner edges through inner
/// degree-2 points are merged into maximal segments and every inner point left
/// uncovered becomes a point-segment. Throws InvalidPartition when the edges
/// fail verification and SpecialInput for special sets.
SegmentCover partition_to_segments(const PointSet& points, std::span<const Edge> partition_edges);

// Merges collinear segments that share an endpoint whenever the union crosses
// nothing else in the cover.
void merge_collinear_segments(const PointSet& points, std::span<const PointId> target, SegmentCover& cover);

}  // namespace convexpart
