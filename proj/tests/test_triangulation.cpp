#include <doctest.h>

#include <algorithm>

#include "convexpart/cover_segments.hpp"
#include "convexpart/errors.hpp"
#include "convexpart/instances_io.hpp"
#include "convexpart/triangulation.hpp"
#include "convexpart/verifier.hpp"

using namespace convexpart;

namespace {

bool has_edge(const std::vector<Edge>& edges, PointId a, PointId b) {
  return std::find(edges.begin(), edges.end(), Edge::make(a, b)) != edges.end();
}

}  // namespace

TEST_CASE("triangle plus centre gives three triangles") {
  const PointSet p({{0, 0}, {6, 0}, {0, 6}, {2, 2}});
  const auto tris = triangulate(p, p.all_ids());
  CHECK(tris.size() == 3);
  for (const Triangle& t : tris) CHECK(orientation(p[t[0]], p[t[1]], p[t[2]]) == Orientation::CCW);
}

TEST_CASE("triangle count follows Euler's formula") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PointSet p = gen_random(60, seed, 0.0, 1'000'000);
    const HullDecomposition h = hull_decomposition(p);
    REQUIRE(h.boundary_nonextreme.empty());
    const auto tris = triangulate(p, p.all_ids());
    CHECK(tris.size() == 2 * p.size() - h.extreme.size() - 2);
    CHECK(verify_convex_partition(p, triangle_edges(tris)).valid);
  }
}

TEST_CASE("collinear input has no triangles") {
  const PointSet p({{0, 0}, {1, 1}, {2, 2}});
  CHECK(triangulate(p, p.all_ids()).empty());
}

TEST_CASE("collinear boundary points are used as vertices") {
  const PointSet p({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 5}});
  const auto tris = triangulate(p, p.all_ids());
  CHECK(tris.size() == 3);
  CHECK(verify_convex_partition(p, triangle_edges(tris)).valid);
}

TEST_CASE("constrained triangulation keeps the constraints") {
  const PointSet square({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  for (auto [a, b] : {std::pair{0, 2}, std::pair{1, 3}}) {
    const std::vector<Edge> cons{Edge::make(a, b)};
    const auto edges = triangle_edges(constrained_triangulation(square, square.all_ids(), cons));
    CHECK(has_edge(edges, a, b));
    CHECK(edges.size() == 5);
  }
}

TEST_CASE("constraints through points are split") {
  const PointSet p({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {1, 3}});
  const std::vector<Edge> cons{Edge::make(0, 2), Edge::make(3, 5)};
  const auto edges = triangle_edges(constrained_triangulation(p, p.all_ids(), cons));
  CHECK(has_edge(edges, 0, 4));
  CHECK(has_edge(edges, 4, 2));
  CHECK(has_edge(edges, 3, 5));
  CHECK(verify_convex_partition(p, edges).valid);
}

TEST_CASE("random constrained triangulations verify") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PointSet p = gen_random(40, seed, 0.4);
    if (all_collinear(p)) continue;
    // Constraints: a greedy non-crossing segment cover of all points.
    const auto ids = p.all_ids();
    std::vector<Edge> cons;
    for (const Segment& s : greedy_segment_cover(p, ids).segments) {
      if (!s.degenerate()) cons.push_back(Edge::make(s.u, s.v));
    }
    const auto edges = triangle_edges(constrained_triangulation(p, ids, cons));
    CHECK(verify_convex_partition(p, edges).valid);
    const auto norm = normalize_edges(p, edges);
    for (const Edge& c : normalize_edges(p, cons)) CHECK(std::find(norm.begin(), norm.end(), c) != norm.end());
  }
}
