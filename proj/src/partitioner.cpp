#include "convexpart/partitioner.hpp"

#include <algorithm>
#include <cmath>

#include "convexpart/cover_lines.hpp"
#include "convexpart/errors.hpp"
#include "convexpart/triangulation.hpp"

namespace convexpart {
namespace {

void add_ring(std::vector<Edge>& edges, const std::vector<PointId>& ring) {
  for (std::size_t k = 0; k < ring.size(); ++k) edges.push_back(Edge::make(ring[k], ring[(k + 1) % ring.size()]));
}

// Where the ray from p along d leaves conv(P): either a ring point hit
// exactly, or the two ends of the ring edge it crosses.
std::vector<PointId> ray_exit(const PointSet& points, const std::vector<PointId>& ring, const Point& p, Wide dx,
                              Wide dy) {
  auto side = [&](PointId w) {
    return sign(dx * (Wide{points[w].y} - p.y) - dy * (Wide{points[w].x} - p.x));
  };
  for (PointId w : ring) {
    const Wide along = dx * (Wide{points[w].x} - p.x) + dy * (Wide{points[w].y} - p.y);
    if (side(w) == 0 && along > 0) return {w};
  }
  const std::size_t n = ring.size();
  for (std::size_t k = 0; k < n; ++k) {
    const PointId u = ring[k], v = ring[(k + 1) % n];
    if (side(u) < 0 && side(v) > 0) return {u, v};
  }
  throw ConstructionFailed("ray from an inner point does not leave the hull");
}

double harmonic(std::size_t m) {
  double h = 0;
  for (std::size_t k = 1; k <= m; ++k) h += 1.0 / static_cast<double>(k);
  return h;
}

}  // namespace

ConvexPartition make_partition(const PointSet& points, std::span<const Edge> edges) {
  ConvexPartition out;
  out.edges = normalize_edges(points, edges);
  out.faces = bounded_faces(points, out.edges);
  return out;
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Lemma3: return "LEMMA3";
    case Provenance::Exact: return "EXACT";
    case Provenance::Trivial: return "TRIVIAL";
  }
  return "UNKNOWN";
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::Special: return "SPECIAL";
    case Branch::Fallback: return "FALLBACK";
    case Branch::SegmentPipeline: return "SEGMENT_PIPELINE";
  }
  return "UNKNOWN";
}

Certificate lower_bound_faces(const PointSet& points, std::size_t ell_m_or_bound, bool is_exact) {
  const HullDecomposition hull = hull_decomposition(points);
  const InnerClassification cls = classify_inner(points, hull);
  if (cls.is_special) throw SpecialInput("lower bound requested for a special point set");

  std::size_t ell_m = ell_m_or_bound;
  if (!is_exact) {
    // Greedy set cover is within H(max line size) <= H(|P_i|) of optimal.
    const double h = harmonic(hull.inner.size());
    ell_m = static_cast<std::size_t>(std::ceil(static_cast<double>(ell_m_or_bound) / h - 1e-9));
    ell_m = std::max<std::size_t>(ell_m, 1);
  }
  Certificate cert;
  cert.provenance = is_exact ? Provenance::Exact : Provenance::Lemma3;
  cert.lower_bound = (ell_m + 3 * cls.a + 6 * cls.b + 5) / 6;
  return cert;
}

ConvexPartition segments_to_partition(const PointSet& points, const SegmentCover& cover) {
  const HullDecomposition hull = hull_decomposition(points);
  const InnerClassification cls = classify_inner(points, hull);
  if (cls.is_special) throw SpecialInput("segments_to_partition needs a non-special point set");

  std::vector<PointId> ends;
  std::vector<Edge> constraints;
  for (const Segment& s : cover.segments) {
    ends.push_back(s.u);
    ends.push_back(s.v);
    if (!s.degenerate()) constraints.push_back(Edge::make(s.u, s.v));
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  for (PointId v : cls.extreme_inner) {
    if (!std::binary_search(ends.begin(), ends.end(), v)) {
      throw ValidationError("cover does not use every extreme inner point as an endpoint");
    }
  }

  std::vector<Edge> edges = triangle_edges(constrained_triangulation(points, ends, constraints));
  add_ring(edges, hull.ring);
  add_ring(edges, cls.extreme_inner);

  // Annulus: each inner hull edge e_j sees an arc of the outer ring strictly
  // on its outer side. Spokes from v_j go to the first point of the arc of
  // e_j and, for type (b) vertices, also to the last point of the arc of
  // e_{j-1}.
  const auto& inner = cls.extreme_inner;
  const auto& ring = hull.ring;
  const std::size_t m = inner.size(), n_ring = ring.size();
  auto outside = [&](std::size_t j, std::size_t k) {
    return cross(points[inner[j]], points[inner[(j + 1) % m]], points[ring[k % n_ring]]) < 0;
  };
  auto arc_start = [&](std::size_t j) {
    for (std::size_t k = 0; k < n_ring; ++k) {
      if (outside(j, k) && !outside(j, k + n_ring - 1)) return ring[k];
    }
    throw ConstructionFailed("inner hull edge sees no outer point");
  };
  auto arc_end = [&](std::size_t j) {
    for (std::size_t k = 0; k < n_ring; ++k) {
      if (outside(j, k) && !outside(j, k + 1)) return ring[k];
    }
    throw ConstructionFailed("inner hull edge sees no outer point");
  };
  // A type (a) vertex takes whichever of the two candidates lies in its
  // closed wedge; arc_start(j) covers the open wedge and the forward ray of
  // e_{j-1}, arc_end(j-1) the backward ray of e_j.
  std::vector<char> is_b(points.size(), 0);
  for (PointId v : cls.type_b) is_b[static_cast<std::size_t>(v)] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    const PointId v = inner[j];
    const PointId start = arc_start(j), end = arc_end((j + m - 1) % m);
    if (is_b[static_cast<std::size_t>(v)]) {
      edges.push_back(Edge::make(v, start));
      edges.push_back(Edge::make(v, end));
    } else if (cross(points[inner[(j + m - 1) % m]], points[v], points[start]) <= 0) {
      edges.push_back(Edge::make(v, start));
    } else {
      edges.push_back(Edge::make(v, end));
    }
  }

  ConvexPartition out = make_partition(points, edges);
  if (out.f() > 4 * cover.s() + cls.a + 2 * cls.b) {
    throw ConstructionFailed("partition exceeds 4s + a + 2b faces");
  }
  return out;
}

ConvexPartition special_partition(const PointSet& points) {
  if (points.size() < 3 || all_collinear(points)) throw AllCollinear();
  const HullDecomposition hull = hull_decomposition(points);
  std::vector<PointId> chain = hull.inner;
  std::vector<Edge> edges;
  add_ring(edges, hull.ring);
  if (chain.empty()) return make_partition(points, edges);

  Wide dx, dy;
  if (chain.size() == 1) {
    const Point& w = points[hull.extreme[0]];
    dx = Wide{w.x} - points[chain[0]].x;
    dy = Wide{w.y} - points[chain[0]].y;
  } else {
    if (!all_collinear(points, chain)) throw ValidationError("special_partition needs collinear inner points");
    std::sort(chain.begin(), chain.end(), [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });
    dx = Wide{points[chain.back()].x} - points[chain.front()].x;
    dy = Wide{points[chain.back()].y} - points[chain.front()].y;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.push_back(Edge::make(chain[i], chain[i + 1]));
  }
  for (PointId w : ray_exit(points, hull.ring, points[chain.back()], dx, dy)) {
    edges.push_back(Edge::make(chain.back(), w));
  }
  for (PointId w : ray_exit(points, hull.ring, points[chain.front()], -dx, -dy)) {
    edges.push_back(Edge::make(chain.front(), w));
  }
  return make_partition(points, edges);
}

ConvexPartition fallback_partition(const PointSet& points) {
  if (points.size() < 3 || all_collinear(points)) throw AllCollinear();
  const std::vector<PointId> ids = points.all_ids();
  const std::vector<Edge> edges = triangle_edges(triangulate(points, ids));
  ConvexPartition out;
  out.edges = edges;
  out.faces = bounded_faces(points, out.edges);
  return out;
}

McpResult mcp_approx(const PointSet& points) {
  if (points.size() < 3 || all_collinear(points)) throw AllCollinear();
  const HullDecomposition hull = hull_decomposition(points);
  const InnerClassification cls = classify_inner(points, hull);

  McpResult res;
  res.a = cls.a;
  res.b = cls.b;
  if (cls.is_special) {
    res.branch = Branch::Special;
    res.partition = special_partition(points);
  } else {
    const LineCover lines = greedy_line_cover(points, hull.inner);
    res.ell = lines.ell();
    if (above_threshold(res.ell, points.size())) {
      res.branch = Branch::Fallback;
      res.partition = fallback_partition(points);
    } else {
      res.branch = Branch::SegmentPipeline;
      const SegmentCover segs = lines_to_noncrossing_segments(points, hull.inner, lines);
      res.s = segs.s();
      res.partition = segments_to_partition(points, segs);
    }
    res.certificate = lower_bound_faces(points, res.ell, false);
  }
  res.certificate.upper_bound = res.partition.f();
  res.certificate.ratio_bound = Rational::make(static_cast<std::int64_t>(res.certificate.upper_bound),
                                               static_cast<std::int64_t>(res.certificate.lower_bound));
  return res;
}

}  // namespace convexpart
