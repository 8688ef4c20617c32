#include <doctest.h>

#include "convexpart/errors.hpp"
#include "convexpart/instances_io.hpp"
#include "convexpart/oracles.hpp"
#include "convexpart/verifier.hpp"

using namespace convexpart;

TEST_CASE("exact_mcp on small fixtures") {
  SUBCASE("triangle") {
    const PointSet p({{0, 0}, {5, 0}, {0, 5}});
    CHECK(exact_mcp(p).optimum == 1);
  }
  SUBCASE("fig2_left") {
    const PointSet p = fixture("fig2_left");
    const OracleResult r = exact_mcp(p);
    CHECK(r.optimum == 3);
    CHECK_FALSE(r.budget_hit);
    const VerifyReport rep = verify_convex_partition(p, r.edges);
    CHECK(rep.valid);
    CHECK(rep.face_count == 3);
  }
  SUBCASE("square and centre: the diagonal through the centre wins") {
    const PointSet p({{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
    CHECK(exact_mcp(p).optimum == 2);
  }
  SUBCASE("square and off-centre point") {
    const PointSet p({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}});
    CHECK(exact_mcp(p).optimum == 3);
  }
  SUBCASE("convex position") {
    const PointSet p({{0, 0}, {4, 0}, {6, 3}, {4, 6}, {0, 6}, {-2, 3}});
    CHECK(exact_mcp(p).optimum == 1);
  }
  SUBCASE("collinear fan with two inner points") {
    const PointSet p = gen_collinear_fan(1);
    CHECK(exact_mcp(p).optimum == 2);
  }
}

TEST_CASE("exact_mcp guards") {
  CHECK_THROWS_AS(exact_mcp(gen_random(9, 1, 0.0)), GuardExceeded);
  CHECK_THROWS_AS(exact_mcp(PointSet({{0, 0}, {1, 1}, {2, 2}})), AllCollinear);
}

TEST_CASE("exact_mcp never beats a verified witness") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const PointSet p = gen_random(7, seed, 0.3, 16);
    if (all_collinear(p)) continue;
    const OracleResult r = exact_mcp(p);
    const VerifyReport rep = verify_convex_partition(p, r.edges);
    CHECK(rep.valid);
    CHECK(rep.face_count == r.optimum);
  }
}

TEST_CASE("exact segment cover") {
  const PointSet grid2({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(exact_segment_cover(grid2, grid2.all_ids()).optimum == 2);
  const PointSet mixed({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {1, 5}, {2, 7}});
  const OracleResult r = exact_segment_cover(mixed, mixed.all_ids());
  CHECK(r.optimum == 2);
  CHECK(verify_segment_cover(mixed, mixed.all_ids(), r.segments).valid);
  CHECK(exact_segment_cover(mixed, std::vector<PointId>{}).optimum == 0);
}
