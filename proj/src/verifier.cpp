#include "convexpart/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "convexpart/cover_segments.hpp"
#include "convexpart/errors.hpp"

namespace convexpart {
namespace {

// Reports beyond this many per code are summarised in one trailing line.
constexpr std::size_t kMaxPerCode = 64;

std::string edge_str(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void check_ids(const PointSet& points, PointId a, PointId b, const char* what) {
  const auto n = static_cast<PointId>(points.size());
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw ValidationError(std::string(what) + " references a point id outside 0.." + std::to_string(n - 1));
  }
}

class Collector {
 public:
  explicit Collector(VerifyReport& report) : report_(report) {}
  void add(ViolationCode code, std::string detail) {
    auto& count = counts_[code];
    if (++count <= kMaxPerCode) report_.add(code, std::move(detail));
  }
  ~Collector() {
    for (auto [code, count] : counts_) {
      if (count > kMaxPerCode) report_.add(code, std::to_string(count - kMaxPerCode) + " more not listed");
    }
  }

 private:
  VerifyReport& report_;
  std::map<ViolationCode, std::size_t> counts_;
};

}  // namespace

const char* code_name(ViolationCode code) {
  switch (code) {
    case ViolationCode::CrossingEdges: return "CROSSING_EDGES";
    case ViolationCode::NonconvexFace: return "NONCONVEX_FACE";
    case ViolationCode::PointInFaceInterior: return "POINT_IN_FACE_INTERIOR";
    case ViolationCode::ZeroDegreePoint: return "ZERO_DEGREE_POINT";
    case ViolationCode::HullMismatch: return "HULL_MISMATCH";
    case ViolationCode::UncoveredPoint: return "UNCOVERED_POINT";
    case ViolationCode::CrossingSegments: return "CROSSING_SEGMENTS";
  }
  return "UNKNOWN";
}

void VerifyReport::add(ViolationCode code, std::string detail) {
  valid = false;
  violations.push_back({code, std::move(detail)});
}

bool VerifyReport::has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.code == code; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << (valid ? "VALID" : "INVALID") << '\n';
  for (const auto& v : violations) os << code_name(v.code) << '\t' << v.detail << '\n';
  return os.str();
}

namespace {

void check_partition(const PointSet& points, std::span<const Edge> input, VerifyReport& report) {
  {
    Collector out(report);
    std::vector<Edge> edges;
    edges.reserve(input.size());
    for (const Edge& e : input) {
      check_ids(points, e.u, e.v, "edge");
      if (e.u == e.v) throw ValidationError("edge " + edge_str(e) + " is a self-loop");
      edges.push_back(Edge::make(e.u, e.v));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i] == edges[i - 1]) out.add(ViolationCode::CrossingEdges, "duplicate edge " + edge_str(edges[i]));
    }
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // Sweep by x-extent for the pairwise tests.
    std::vector<PointId> by_x = points.all_ids();
    std::sort(by_x.begin(), by_x.end(), [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });
    auto lo_x = [&](const Edge& e) { return std::min(points[e.u].x, points[e.v].x); };
    auto hi_x = [&](const Edge& e) { return std::max(points[e.u].x, points[e.v].x); };
    std::vector<Edge> sweep = edges;
    std::sort(sweep.begin(), sweep.end(), [&](const Edge& a, const Edge& b) { return lo_x(a) < lo_x(b); });

    for (const Edge& e : sweep) {
      auto it = std::lower_bound(by_x.begin(), by_x.end(), lo_x(e),
                                 [&](PointId id, Coord x) { return points[id].x < x; });
      for (; it != by_x.end() && points[*it].x <= hi_x(e); ++it) {
        if (in_open_segment(points[*it], points[e.u], points[e.v])) {
          out.add(ViolationCode::CrossingEdges, "edge " + edge_str(e) + " passes through point " + std::to_string(*it));
        }
      }
    }
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      const Edge& e = sweep[i];
      for (std::size_t j = i + 1; j < sweep.size() && lo_x(sweep[j]) <= hi_x(e); ++j) {
        const Edge& f = sweep[j];
        if (relative_interiors_intersect(points[e.u], points[e.v], points[f.u], points[f.v])) {
          out.add(ViolationCode::CrossingEdges, "edges " + edge_str(e) + " and " + edge_str(f) + " cross");
        }
      }
    }

    std::vector<std::size_t> degree(points.size(), 0);
    for (const Edge& e : edges) {
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    for (std::size_t v = 0; v < points.size(); ++v) {
      if (degree[v] == 0) out.add(ViolationCode::ZeroDegreePoint, "point " + std::to_string(v) + " has no edge");
    }
    if (report.has(ViolationCode::CrossingEdges)) return;

    const HullDecomposition hull = hull_decomposition(points);
    if (hull.extreme.size() < 3) {
      out.add(ViolationCode::HullMismatch, "point set spans no area");
      return;
    }

    std::size_t outer_cycles = 0;
    Area face_area = 0;
    std::size_t bounded = 0;
    for (const auto& face : extract_faces(points, edges)) {
      if (face.twice_area <= 0) {
        ++outer_cycles;
        continue;
      }
      ++bounded;
      face_area += face.twice_area;
      const auto& cyc = face.vertices;
      const std::size_t m = cyc.size();
      std::string label = "face at";
      for (std::size_t k = 0; k < std::min<std::size_t>(m, 6); ++k) label += " " + std::to_string(cyc[k]);
      if (m > 6) label += " ...";

      std::vector<PointId> sorted_cycle = cyc;
      std::sort(sorted_cycle.begin(), sorted_cycle.end());
      bool convex = std::adjacent_find(sorted_cycle.begin(), sorted_cycle.end()) == sorted_cycle.end();
      for (std::size_t k = 0; k < m && convex; ++k) {
        const Point& a = points[cyc[(k + m - 1) % m]];
        const Point& b = points[cyc[k]];
        const Point& c = points[cyc[(k + 1) % m]];
        const Wide turn = cross(a, b, c);
        if (turn < 0 || (turn == 0 && dot(b, a, c) >= 0)) convex = false;
      }
      if (!convex) {
        out.add(ViolationCode::NonconvexFace, label + " is not convex");
        continue;
      }
      Coord min_x = points[cyc[0]].x, max_x = min_x;
      for (PointId v : cyc) {
        min_x = std::min(min_x, points[v].x);
        max_x = std::max(max_x, points[v].x);
      }
      auto it = std::lower_bound(by_x.begin(), by_x.end(), min_x,
                                 [&](PointId id, Coord x) { return points[id].x < x; });
      for (; it != by_x.end() && points[*it].x <= max_x; ++it) {
        if (strictly_inside_convex(points, cyc, points[*it])) {
          out.add(ViolationCode::PointInFaceInterior, "point " + std::to_string(*it) + " inside " + label);
        }
      }
    }
    if (outer_cycles != 1) {
      out.add(ViolationCode::HullMismatch, "edge graph has " + std::to_string(outer_cycles) + " components");
    }
    const Area hull_area = twice_signed_area(points, hull.extreme);
    if (face_area != hull_area) {
      out.add(ViolationCode::HullMismatch,
              "faces cover twice-area " + face_area.str() + " but the hull has " + hull_area.str());
    }
    report.face_count = bounded;
  }
}

}  // namespace

VerifyReport verify_convex_partition(const PointSet& points, std::span<const Edge> edges) {
  VerifyReport report;
  check_partition(points, edges, report);
  return report;
}

VerifyReport verify_segment_cover(const PointSet& points, std::span<const PointId> target, const SegmentCover& cover) {
  VerifyReport report;
  {
    Collector out(report);
    const auto& segs = cover.segments;
    for (const auto& s : segs) check_ids(points, s.u, s.v, "segment");
    for (PointId id : target) {
      const bool hit = std::any_of(segs.begin(), segs.end(), [&](const Segment& s) {
        return on_closed_segment(points[id], points[s.u], points[s.v]);
      });
      if (!hit) out.add(ViolationCode::UncoveredPoint, "point " + std::to_string(id) + " is not covered");
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        if (segments_cross(points, segs[i], segs[j])) {
          out.add(ViolationCode::CrossingSegments,
                  "segments " + std::to_string(segs[i].u) + "-" + std::to_string(segs[i].v) + " and " +
                      std::to_string(segs[j].u) + "-" + std::to_string(segs[j].v) + " cross");
        }
      }
    }
  }
  return report;
}

VerifyReport verify_line_cover(const PointSet& points, std::span<const PointId> target, const LineCover& cover) {
  VerifyReport report;
  {
    Collector out(report);
    for (PointId id : target) {
      const bool hit = std::any_of(cover.lines.begin(), cover.lines.end(),
                                   [&](const Line& l) { return l.contains(points[id]); });
      if (!hit) out.add(ViolationCode::UncoveredPoint, "point " + std::to_string(id) + " is not covered");
    }
  }
  return report;
}

}  // namespace convexpart
