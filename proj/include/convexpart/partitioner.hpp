#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "convexpart/cover_segments.hpp"
#include "convexpart/geom_core.hpp"
#include "convexpart/planar_graph.hpp"

namespace convexpart {

struct ConvexPartition {
  std::vector<Edge> edges;                   // normalized: no edge passes through a point
  std::vector<std::vector<PointId>> faces;   // bounded faces, CCW
  std::size_t f() const { return faces.size(); }
};

// Normalizes the edges and extracts the bounded faces.
ConvexPartition make_partition(const PointSet& points, std::span<const Edge> edges);

enum class Provenance { Lemma3, Exact, Trivial };
const char* provenance_name(Provenance p);

struct Certificate {
  std::size_t lower_bound = 1;
  Provenance provenance = Provenance::Trivial;
  std::size_t upper_bound = 0;
  Rational ratio_bound;  // upper_bound / lower_bound
};

/// Lower bound ceil(l_m/6 + a/2 + b) on the faces of any convex partition.
/// With is_exact the count is the minimum line cover of the inner points;
/// otherwise it is a greedy cover size l and l_m >= ceil(l / H(|P_i|)) is
/// used, H being the harmonic number. Throws SpecialInput for special sets.
Certificate lower_bound_faces(const PointSet& points, std::size_t ell_m_or_bound, bool is_exact);

/// Convex partition from a non-crossing cover of the inner points: a
/// constrained triangulation of the segment endpoints plus at most a + 2b
/// annulus faces. Throws SpecialInput for special sets.
ConvexPartition segments_to_partition(const PointSet& points, const SegmentCover& cover);

/// At most four faces for a special set, by extending the inner chain to the
/// hull boundary at both ends. Throws AllCollinear.
ConvexPartition special_partition(const PointSet& points);

/// Triangulation of the whole set (every point a vertex). Throws AllCollinear.
ConvexPartition fallback_partition(const PointSet& points);

enum class Branch { Special, Fallback, SegmentPipeline };
const char* branch_name(Branch b);

struct McpResult {
  ConvexPartition partition;
  Certificate certificate;
  Branch branch = Branch::Special;
  std::size_t ell = 0;  // greedy line cover size of the inner points
  std::size_t s = 0;    // segment cover size (pipeline branch only)
  std::size_t a = 0;
  std::size_t b = 0;
};

// True when l >= sqrt(n / 6), evaluated exactly as 6 l^2 >= n.
inline bool above_threshold(std::size_t ell, std::size_t n) { return 6 * ell * ell >= n; }

/// Full approximation driver. Throws AllCollinear; n >= 3 required.
McpResult mcp_approx(const PointSet& points);

}  // namespace convexpart
