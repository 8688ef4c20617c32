// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "convexpart/cover_lines.hpp"
#include "convexpart/cover_segments.hpp"
#include "convexpart/errors.hpp"
#include "convexpart/instances_io.hpp"
#include "convexpart/oracles.hpp"
#include "convexpart/partitioner.hpp"
#include "convexpart/triangulation.hpp"
#include "convexpart/verifier.hpp"

using namespace convexpart;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Instance {
  PointSet points;
  HullDecomposition hull;
  InnerClassification cls;
  std::string label;
};

// Non-special, non-collinear random instances from consecutive seeds.
std::vector<Instance> corpus(std::size_t count, std::size_t n_min, std::size_t n_max, std::int64_t range,
                             std::uint64_t seed0) {
  static const double kBiases[] = {0.0, 0.3, 0.6};
  std::vector<Instance> out;
  for (std::uint64_t seed = seed0; out.size() < count; ++seed) {
    const std::size_t n = n_min + static_cast<std::size_t>(seed % (n_max - n_min + 1));
    const double bias = kBiases[seed % 3];
    PointSet p = gen_random(n, seed, bias, range);
    if (p.size() < 3 || all_collinear(p)) continue;
    HullDecomposition h = hull_decomposition(p);
    InnerClassification c = classify_inner(p, h);
    if (c.is_special) continue;
    std::ostringstream label;
    label << "seed=" << seed << " n=" << n << " bias=" << bias;
    out.push_back({std::move(p), std::move(h), std::move(c), label.str()});
  }
  return out;
}

// 1. fig2_left optimum.
Outcome criterion1() {
  const auto t = Clock::now();
  const OracleResult r = exact_mcp(fixture("fig2_left"));
  const double secs = seconds_since(t);
  const VerifyReport rep = verify_convex_partition(fixture("fig2_left"), r.edges);
  std::ostringstream d;
  d << "optimum=" << r.optimum << " witness_faces=" << rep.face_count << " time=" << secs << "s";
  return {r.optimum == 3 && !r.budget_hit && rep.valid && rep.face_count == 3 && secs < 5.0, d.str()};
}

// 2. Collinear fans.
Outcome criterion2() {
  Outcome o;
  std::ostringstream d;
  for (int m : {1, 5, 20, 100}) {
    const PointSet p = gen_collinear_fan(m);
    const VerifyReport w = verify_convex_partition(p, collinear_fan_witness(m));
    const auto t = Clock::now();
    const ConvexPartition part = special_partition(p);
    const VerifyReport s = verify_convex_partition(p, part.edges);
    const double secs = seconds_since(t);
    const bool ok = w.valid && w.face_count == 2 && s.valid && s.face_count == part.f() && part.f() <= 4 && secs < 1.0;
    o.pass = o.pass && ok;
    d << "m=" << m << ":witness=" << w.face_count << ",special=" << part.f() << (ok ? "" : "(bad)") << ' ';
  }
  o.detail = d.str();
  return o;
}

struct PipelineRun {
  SegmentCover cover;
  std::optional<ConvexPartition> partition;
  bool valid = false;
};

// Shared state for criteria 3, 4 and 10.
struct Corpus3 {
  std::vector<Instance> instances;
  std::vector<std::vector<PipelineRun>> runs;  // per instance: line-derived and greedy covers
};

Corpus3 build_corpus3() {
  Corpus3 c;
  c.instances = corpus(200, 8, 40, 0, 1);
  for (const Instance& inst : c.instances) {
    std::vector<PipelineRun> runs;
    const LineCover lines = greedy_line_cover(inst.points, inst.hull.inner);
    for (SegmentCover cover : {lines_to_noncrossing_segments(inst.points, inst.hull.inner, lines),
                               greedy_segment_cover(inst.points, inst.hull.inner)}) {
      PipelineRun run;
      run.cover = std::move(cover);
      try {
        run.partition = segments_to_partition(inst.points, run.cover);
        run.valid = verify_convex_partition(inst.points, run.partition->edges).valid;
      } catch (const Error&) {
        run.partition.reset();
      }
      runs.push_back(std::move(run));
    }
    c.runs.push_back(std::move(runs));
  }
  return c;
}

// 3. Faces of segments_to_partition <= 4s + a + 2b.
Outcome criterion3(const Corpus3& c) {
  std::size_t checks = 0, violations = 0;
  std::string first;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const Instance& inst = c.instances[i];
    for (const PipelineRun& run : c.runs[i]) {
      ++checks;
      const bool cover_ok = verify_segment_cover(inst.points, inst.hull.inner, run.cover).valid;
      const bool ok = cover_ok && run.partition && run.valid &&
                      run.partition->f() <= 4 * run.cover.s() + inst.cls.a + 2 * inst.cls.b;
      if (!ok) {
        ++violations;
        if (first.empty()) first = " first=" + inst.label;
      }
    }
  }
  std::ostringstream d;
  d << "instances=" << c.instances.size() << " checks=" << checks << " violations=" << violations << first;
  return {violations == 0 && c.instances.size() == 200, d.str()};
}

// 4. partition_to_segments size <= 6f - 3a - 6b, on the pipeline partitions and
// on full triangulations.
Outcome criterion4(const Corpus3& c) {
  std::size_t checks = 0, violations = 0;
  std::string first;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const Instance& inst = c.instances[i];
    std::vector<ConvexPartition> partitions{fallback_partition(inst.points)};
    for (const PipelineRun& run : c.runs[i]) {
      if (run.partition && run.valid) partitions.push_back(*run.partition);
    }
    for (const ConvexPartition& part : partitions) {
      ++checks;
      bool ok = false;
      try {
        const SegmentCover cover = partition_to_segments(inst.points, part.edges);
        const long long bound = 6 * static_cast<long long>(part.f()) - 3 * static_cast<long long>(inst.cls.a) -
                                6 * static_cast<long long>(inst.cls.b);
        ok = static_cast<long long>(cover.s()) <= bound &&
             verify_segment_cover(inst.points, inst.hull.inner, cover).valid;
      } catch (const Error&) {
        ok = false;
      }
      if (!ok) {
        ++violations;
        if (first.empty()) first = " first=" + inst.label;
      }
    }
  }
  std::ostringstream d;
  d << "checks=" << checks << " violations=" << violations << first;
  return {violations == 0, d.str()};
}

// Small instances within both oracle guards, shared by criteria 5 and 8.
struct SmallCase {
  Instance inst;
  std::size_t f_m = 0;
  bool exact = true;
};

std::vector<SmallCase> small_cases(std::size_t count) {
  std::vector<SmallCase> out;
  for (Instance& inst : corpus(count, 6, 8, 12, 10'000)) {
    const OracleResult r = exact_mcp(inst.points);
    out.push_back({std::move(inst), r.optimum, !r.budget_hit});
  }
  return out;
}

// 5. Face lower bound from the exact line cover.
Outcome criterion5(const std::vector<SmallCase>& cases) {
  std::size_t violations = 0;
  std::string first;
  for (const SmallCase& sc : cases) {
    const auto lines = exact_line_cover(sc.inst.points, sc.inst.hull.inner);
    bool ok = lines.has_value() && sc.exact;
    if (ok) {
      const std::size_t ell_m = lines->ell();
      const std::size_t bound = (ell_m + 3 * sc.inst.cls.a + 6 * sc.inst.cls.b + 5) / 6;
      ok = sc.f_m >= bound && sc.inst.cls.a + sc.inst.cls.b >= 3;
    }
    if (!ok) {
      ++violations;
      if (first.empty()) first = " first=" + sc.inst.label;
    }
  }
  std::ostringstream d;
  d << "instances=" << cases.size() << " violations=" << violations << first;
  return {violations == 0 && cases.size() == 100, d.str()};
}

// 6. Greedy segment cover ratio on the adversarial grids.
Outcome criterion6() {
  const auto t = Clock::now();
  Outcome o;
  std::ostringstream d;
  for (int k = 2; k <= 6; ++k) {
    const PointSet grid = gen_adversarial_grid(k);
    const auto all = grid.all_ids();
    const SegmentCover greedy = greedy_segment_cover(grid, all);
    const bool valid = verify_segment_cover(grid, all, greedy).valid;
    const std::size_t opt = static_cast<std::size_t>(2 * k + 1);
    // greedy / (2k+1) >= k/2  <=>  2 * greedy >= k * (2k+1)
    const bool ok = valid && 2 * greedy.s() >= static_cast<std::size_t>(k) * opt;
    o.pass = o.pass && ok;
    d << "k=" << k << ":" << greedy.s() << "/" << opt << (ok ? "" : "(bad)") << ' ';
  }
  const double secs = seconds_since(t);
  o.pass = o.pass && secs < 60.0;
  d << "time=" << secs << "s";
  o.detail = d.str();
  return o;
}

// 7. Greedy line cover guarantee.
Outcome criterion7() {
  std::size_t count = 0, violations = 0;
  std::string first;
  static const double kBiases[] = {0.0, 0.3, 0.6};
  for (std::uint64_t seed = 20'000; count < 100; ++seed) {
    const std::size_t n = 3 + static_cast<std::size_t>(seed % 13);
    const PointSet p = gen_random(n, seed, kBiases[seed % 3], 10);
    const auto all = p.all_ids();
    const auto exact = exact_line_cover(p, all);
    const LineCover greedy = greedy_line_cover(p, all);
    ++count;
    const bool ok = exact.has_value() && verify_line_cover(p, all, greedy).valid &&
                    static_cast<double>(greedy.ell()) <=
                        (std::log(static_cast<double>(p.size())) + 1.0) * static_cast<double>(exact->ell());
    if (!ok) {
      ++violations;
      if (first.empty()) first = " first_seed=" + std::to_string(seed);
    }
  }
  std::ostringstream d;
  d << "instances=" << count << " violations=" << violations << first;
  return {violations == 0, d.str()};
}

// 8. Segment cover versus partition inequalities.
Outcome criterion8(const std::vector<SmallCase>& cases) {
  std::size_t used = 0, violations = 0;
  std::string first;
  for (const SmallCase& sc : cases) {
    if (used == 50) break;
    if (sc.inst.hull.inner.size() > kExactSegmentCoverGuard) continue;
    ++used;
    const OracleResult s = exact_segment_cover(sc.inst.points, sc.inst.hull.inner);
    const long long s_m = static_cast<long long>(s.optimum);
    const long long f_m = static_cast<long long>(sc.f_m);
    const long long a = static_cast<long long>(sc.inst.cls.a), b = static_cast<long long>(sc.inst.cls.b);
    const bool ok = sc.exact && !s.budget_hit && 4 * s_m >= f_m - a - 2 * b && s_m >= (a + b + 1) / 2;
    if (!ok) {
      ++violations;
      if (first.empty()) first = " first=" + sc.inst.label;
    }
  }
  std::ostringstream d;
  d << "instances=" << used << " violations=" << violations << first;
  return {violations == 0 && used == 50, d.str()};
}

// 9. Quadratic-time sanity.
Outcome criterion9() {
  auto median_ms = [](std::size_t n) {
    const PointSet p = gen_random(n, 1, 0.0);
    std::vector<double> times;
    for (int r = 0; r < 5; ++r) {
      const auto t = Clock::now();
      const McpResult res = mcp_approx(p);
      times.push_back(seconds_since(t) * 1000.0);
      if (res.partition.f() == 0) times.back() = 1e18;
    }
    std::sort(times.begin(), times.end());
    return times[2];
  };
  const double t1 = median_ms(1000), t2 = median_ms(2000);
  std::ostringstream d;
  d << "median_1000=" << t1 << "ms median_2000=" << t2 << "ms ratio=" << t2 / t1;
  return {t2 <= 6.0 * t1, d.str()};
}

// 10. Verifier exactness: area accounting and seeded mutations.
Area face_area_sum(const PointSet& p, std::span<const Edge> edges) {
  Area sum = 0;
  for (const auto& face : bounded_faces(p, edges)) sum += twice_signed_area(p, face);
  return sum;
}

Wide cross_sign(const Point& a, const Point& b, const Point& c) { return sign(cross(a, b, c)); }

struct Mutations {
  std::size_t applied = 0, rejected = 0;
};

void mutate_triangulation(const PointSet& p, Mutations& m, std::string& first, const std::string& label) {
  const std::vector<Triangle> tris = triangulate(p, p.all_ids());
  const std::vector<Edge> edges = triangle_edges(tris);
  auto note = [&](bool ok, const char* what) {
    ++m.applied;
    if (ok) {
      ++m.rejected;
    } else if (first.empty()) {
      first = std::string(" first=") + what + "@" + label;
    }
  };

  // Interior edges with their two apexes.
  struct Adj {
    Edge e;
    PointId c, d;
  };
  std::vector<std::pair<Edge, PointId>> half;
  for (const Triangle& t : tris) {
    for (int k = 0; k < 3; ++k) half.push_back({Edge::make(t[k], t[(k + 1) % 3]), t[(k + 2) % 3]});
  }
  std::sort(half.begin(), half.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Adj> interior;
  for (std::size_t i = 0; i + 1 < half.size(); ++i) {
    if (half[i].first == half[i + 1].first) interior.push_back({half[i].first, half[i].second, half[i + 1].second});
  }

  // Edge crossing: the other diagonal of a strictly convex quadrilateral.
  std::optional<Adj> convex_quad, reflex_quad;
  for (const Adj& q : interior) {
    const Wide sa = cross_sign(p[q.c], p[q.d], p[q.e.u]), sb = cross_sign(p[q.c], p[q.d], p[q.e.v]);
    if (sa * sb < 0 && !convex_quad) convex_quad = q;
    if (sa * sb > 0 && !reflex_quad) reflex_quad = q;
  }
  if (convex_quad) {
    std::vector<Edge> e = edges;
    e.push_back(Edge::make(convex_quad->c, convex_quad->d));
    note(verify_convex_partition(p, e).has(ViolationCode::CrossingEdges), "crossing");
  } else {
    // No flippable edge: any chord properly crossing a triangulation edge.
    auto proper = [&](const Edge& x, PointId u, PointId v) {
      return cross_sign(p[x.u], p[x.v], p[u]) * cross_sign(p[x.u], p[x.v], p[v]) < 0 &&
             cross_sign(p[u], p[v], p[x.u]) * cross_sign(p[u], p[v], p[x.v]) < 0;
    };
    std::optional<Edge> chord;
    for (PointId u = 0; u < static_cast<PointId>(p.size()) && !chord; ++u) {
      for (PointId v = u + 1; v < static_cast<PointId>(p.size()) && !chord; ++v) {
        for (const Edge& x : edges) {
          if (proper(x, u, v)) {
            chord = Edge::make(u, v);
            break;
          }
        }
      }
    }
    if (chord) {
      std::vector<Edge> e = edges;
      e.push_back(*chord);
      note(verify_convex_partition(p, e).has(ViolationCode::CrossingEdges), "crossing");
    }
  }

  // Dropped edge: a reflex union gives a nonconvex face; a hull edge leaves
  // the hull uncovered.
  {
    std::vector<Edge> e;
    ViolationCode expect = ViolationCode::HullMismatch;
    Edge drop{};
    if (reflex_quad) {
      drop = reflex_quad->e;
      expect = ViolationCode::NonconvexFace;
    } else {
      const HullDecomposition h = hull_decomposition(p);
      drop = Edge::make(h.ring[0], h.ring[1]);
    }
    for (const Edge& x : edges) {
      if (!(x == drop)) e.push_back(x);
    }
    note(verify_convex_partition(p, e).has(expect), expect == ViolationCode::NonconvexFace ? "drop-reflex" : "drop-hull");
  }

  // Interior point: the centroid of a triangle, in coordinates scaled by 3.
  {
    std::vector<std::pair<Coord, Coord>> c;
    for (const Point& q : p) c.emplace_back(3 * q.x, 3 * q.y);
    const Triangle& t = tris[tris.size() / 2];
    c.emplace_back(p[t[0]].x + p[t[1]].x + p[t[2]].x, p[t[0]].y + p[t[1]].y + p[t[2]].y);
    const PointSet scaled(c);
    note(verify_convex_partition(scaled, edges).has(ViolationCode::PointInFaceInterior), "interior-point");
  }
}

Outcome criterion10(const Corpus3& c) {
  std::size_t partitions = 0, area_failures = 0;
  Mutations m;
  std::string first;
  auto check_area = [&](const PointSet& p, const HullDecomposition& h, std::span<const Edge> edges,
                        const std::string& label) {
    if (!verify_convex_partition(p, edges).valid) return;
    ++partitions;
    if (face_area_sum(p, edges) != twice_signed_area(p, h.extreme)) {
      ++area_failures;
      if (first.empty()) first = " area@" + label;
    }
  };
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    const Instance& inst = c.instances[i];
    check_area(inst.points, inst.hull, fallback_partition(inst.points).edges, inst.label);
    for (const PipelineRun& run : c.runs[i]) {
      if (run.partition) check_area(inst.points, inst.hull, run.partition->edges, inst.label);
    }
    mutate_triangulation(inst.points, m, first, inst.label);
  }
  for (int mm : {1, 5, 20, 100}) {
    const PointSet p = gen_collinear_fan(mm);
    const HullDecomposition h = hull_decomposition(p);
    check_area(p, h, special_partition(p).edges, "fan");
    check_area(p, h, collinear_fan_witness(mm), "fan-witness");
  }
  std::ostringstream d;
  d << "partitions=" << partitions << " area_failures=" << area_failures << " mutations=" << m.applied
    << " rejected=" << m.rejected << first;
  return {area_failures == 0 && m.applied == m.rejected && m.applied + c.instances.size() >= 3 * c.instances.size(),
          d.str()};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };

  const Corpus3 c3 = build_corpus3();
  const std::vector<SmallCase> small = small_cases(100);
  report(1, criterion1);
  report(2, criterion2);
  report(3, [&] { return criterion3(c3); });
  report(4, [&] { return criterion4(c3); });
  report(5, [&] { return criterion5(small); });
  report(6, criterion6);
  report(7, criterion7);
  report(8, [&] { return criterion8(small); });
  report(9, criterion9);
  report(10, [&] { return criterion10(c3); });
  return failures == 0 ? 0 : 1;
}
