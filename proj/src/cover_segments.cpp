#include "convexpart/cover_segments.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "convexpart/errors.hpp"
#include "convexpart/verifier.hpp"

namespace convexpart {
namespace {

void sort_from(const PointSet& points, PointId origin, std::vector<PointId>& ids) {
  const Point& o = points[origin];
  std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) {
    return dot(o, points[a], points[a]) < dot(o, points[b], points[b]);
  });
}

std::vector<char> covered_mask(const PointSet& points, std::span<const PointId> target, const SegmentCover& cover) {
  std::vector<char> mask(points.size(), 0);
  for (const auto& seg : cover.segments) {
    for (PointId id : target) {
      if (on_closed_segment(points[id], points[seg.u], points[seg.v])) mask[static_cast<std::size_t>(id)] = 1;
    }
  }
  return mask;
}

// Sign of the target point relative to a line, as a + b - c evaluation.
int side(const Line& line, const Point& p) {
  return sign(Wide{line.a} * p.x + Wide{line.b} * p.y - line.c);
}

// Index k such that the piece [k-1, k] of `ordered` strictly crosses `other`,
// or 0 if none. The side function is monotone along the line.
std::size_t crossing_piece(const PointSet& points, const std::vector<PointId>& ordered, const Line& other) {
  if (ordered.size() < 2) return 0;
  const int first = side(other, points[ordered.front()]);
  const int last = side(other, points[ordered.back()]);
  if (first == 0 || last == 0 || first == last) return 0;
  std::size_t lo = 0, hi = ordered.size() - 1;  // side(lo) == first, side(hi) != first
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (side(other, points[ordered[mid]]) == first ? lo : hi) = mid;
  }
  return side(other, points[ordered[hi]]) == -first ? hi : 0;
}

}  // namespace

bool relative_interiors_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  const bool a_point = same_position(a1, a2);
  const bool b_point = same_position(b1, b2);
  if (a_point && b_point) return same_position(a1, b1);
  if (a_point) return in_open_segment(a1, b1, b2);
  if (b_point) return in_open_segment(b1, a1, a2);

  const int o1 = sign(cross(a1, a2, b1));
  const int o2 = sign(cross(a1, a2, b2));
  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the open parameter intervals along a1 -> a2.
    const Wide hi_a = dot(a1, a2, a2);
    const Wide t1 = dot(a1, a2, b1);
    const Wide t2 = dot(a1, a2, b2);
    const Wide lo = std::max<Wide>(0, std::min(t1, t2));
    const Wide hi = std::min(hi_a, std::max(t1, t2));
    return lo < hi;
  }
  const int o3 = sign(cross(b1, b2, a1));
  const int o4 = sign(cross(b1, b2, a2));
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Segment make_segment(const PointSet& points, std::span<const PointId> target, PointId u, PointId v) {
  Segment seg{u, v, {}};
  for (PointId id : target) {
    if (on_closed_segment(points[id], points[u], points[v])) seg.covered.push_back(id);
  }
  sort_from(points, u, seg.covered);
  return seg;
}

void merge_collinear_segments(const PointSet& points, std::span<const PointId> target, SegmentCover& cover) {
  auto& segs = cover.segments;
  // Point-segments already covered by a proper segment are redundant.
  std::erase_if(segs, [&](const Segment& s) {
    if (!s.degenerate()) return false;
    return std::any_of(segs.begin(), segs.end(), [&](const Segment& t) {
      return !t.degenerate() && on_closed_segment(points[s.u], points[t.u], points[t.v]);
    });
  });

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < segs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < segs.size() && !changed; ++j) {
        const Segment& s = segs[i];
        const Segment& t = segs[j];
        if (s.degenerate() || t.degenerate()) continue;
        PointId shared = -1, s_end = -1, t_end = -1;
        for (auto [a, b] : {std::pair{s.u, s.v}, std::pair{s.v, s.u}}) {
          for (auto [c, d] : {std::pair{t.u, t.v}, std::pair{t.v, t.u}}) {
            if (a == c) std::tie(shared, s_end, t_end) = std::tuple{a, b, d};
          }
        }
        if (shared < 0) continue;
        const Point& p = points[shared];
        if (cross(points[s_end], p, points[t_end]) != 0 || dot(p, points[s_end], points[t_end]) >= 0) continue;
        const bool blocked = std::any_of(segs.begin(), segs.end(), [&](const Segment& k) {
          if (&k == &s || &k == &t) return false;
          return relative_interiors_intersect(points[s_end], points[t_end], points[k.u], points[k.v]);
        });
        if (blocked) continue;
        Segment merged = make_segment(points, target, s_end, t_end);
        segs.erase(segs.begin() + static_cast<std::ptrdiff_t>(j));
        segs[i] = std::move(merged);
        changed = true;
      }
    }
  }
}

SegmentCover greedy_segment_cover(const PointSet& points, std::span<const PointId> target) {
  SegmentCover cover;
  const std::size_t n = target.size();
  if (n == 0) return cover;

  std::vector<std::size_t> position(points.size(), 0);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(target[i])] = i;

  // Each line keeps its points in order; a candidate is a run [first, last]
  // of one line, or a single point (line == npos).
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Candidate {
    PointId u, v;
    std::size_t line, first, last;
    PointId lo_id, hi_id;
    bool alive = true;
  };
  const std::vector<Line> lines = enumerate_lines(points, target);
  std::vector<Candidate> candidates;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& run = lines[l].covered;
    for (std::size_t i = 0; i < run.size(); ++i) {
      for (std::size_t j = i + 1; j < run.size(); ++j) {
        candidates.push_back({run[i], run[j], l, i, j, std::min(run[i], run[j]), std::max(run[i], run[j])});
      }
    }
  }
  for (PointId id : target) candidates.push_back({id, id, kNone, 0, 0, id, id});

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  std::vector<std::vector<std::size_t>> prefix(lines.size());
  while (remaining > 0) {
    for (std::size_t l = 0; l < lines.size(); ++l) {
      const auto& run = lines[l].covered;
      prefix[l].assign(run.size() + 1, 0);
      for (std::size_t i = 0; i < run.size(); ++i) {
        prefix[l][i + 1] = prefix[l][i] + (covered[position[static_cast<std::size_t>(run[i])]] ? 0 : 1);
      }
    }
    std::size_t best = kNone;
    std::tuple<std::size_t, std::size_t, PointId, PointId> best_key{};
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Candidate& cand = candidates[c];
      if (!cand.alive) continue;
      std::size_t gain, length;
      if (cand.line == kNone) {
        gain = covered[position[static_cast<std::size_t>(cand.u)]] ? 0 : 1;
        length = 1;
      } else {
        gain = prefix[cand.line][cand.last + 1] - prefix[cand.line][cand.first];
        length = cand.last - cand.first + 1;
      }
      if (gain == 0) continue;
      // Larger gain, then longer run, then smaller endpoint ids.
      const auto key = std::tuple{gain, length, -cand.lo_id, -cand.hi_id};
      if (best == kNone || key > best_key) {
        best = c;
        best_key = key;
      }
    }
    const Candidate chosen = candidates[best];
    Segment seg = make_segment(points, target, chosen.u, chosen.v);
    for (PointId id : seg.covered) {
      auto& flag = covered[position[static_cast<std::size_t>(id)]];
      if (!flag) {
        flag = 1;
        --remaining;
      }
    }
    const Point& a = points[chosen.u];
    const Point& b = points[chosen.v];
    for (auto& cand : candidates) {
      if (cand.alive && relative_interiors_intersect(a, b, points[cand.u], points[cand.v])) cand.alive = false;
    }
    cover.segments.push_back(std::move(seg));
  }
  merge_collinear_segments(points, target, cover);
  return cover;
}

SegmentConversion lines_to_segments_detailed(const PointSet& points, std::span<const PointId> target,
                                             const LineCover& cover) {
  SegmentConversion out;
  const std::size_t num_lines = cover.lines.size();
  std::vector<Line> lines = cover.lines;
  for (auto& line : lines) attach_incidences(line, points, target);

  // alive[l][k]: piece between points k and k+1 of line l survives.
  std::vector<std::vector<char>> alive(num_lines);
  for (std::size_t l = 0; l < num_lines; ++l) {
    const std::size_t m = lines[l].covered.size();
    alive[l].assign(m >= 2 ? m - 1 : 0, 1);
    out.pieces += m >= 2 ? m - 1 : (m == 1 ? 1 : 0);
  }

  // Two distinct lines meet at most once, so each line pair contributes at
  // most one crossing pair of pieces.
  for (std::size_t i = 0; i < num_lines; ++i) {
    for (std::size_t j = i + 1; j < num_lines; ++j) {
      const std::size_t ki = crossing_piece(points, lines[i].covered, lines[j]);
      if (ki == 0) continue;
      const std::size_t kj = crossing_piece(points, lines[j].covered, lines[i]);
      if (kj == 0) continue;
      if (alive[i][ki - 1] && alive[j][kj - 1]) {
        alive[i][ki - 1] = 0;
        alive[j][kj - 1] = 0;
        ++out.removed_pairs;
      }
    }
  }

  // Surviving pieces are joined into maximal runs. A joint shared with
  // another line may be interior to one merged segment only; later lines
  // stop at it so their segments merely touch there.
  SegmentCover& result = out.cover;
  std::vector<PointId> lonely;
  std::vector<char> passed(points.size(), 0);
  for (std::size_t l = 0; l < num_lines; ++l) {
    const auto& run = lines[l].covered;
    if (run.size() == 1) {
      lonely.push_back(run[0]);
      continue;
    }
    for (std::size_t k = 0; k < alive[l].size();) {
      if (!alive[l][k]) {
        ++k;
        continue;
      }
      std::size_t e = k + 1;
      while (e < alive[l].size() && alive[l][e] && !passed[static_cast<std::size_t>(run[e])]) {
        passed[static_cast<std::size_t>(run[e])] = 1;
        ++e;
      }
      result.segments.push_back(make_segment(points, target, run[k], run[e]));
      k = e;
    }
  }
  std::vector<char> mask = covered_mask(points, target, result);
  std::sort(lonely.begin(), lonely.end());
  lonely.erase(std::unique(lonely.begin(), lonely.end()), lonely.end());
  for (PointId id : lonely) {
    if (!mask[static_cast<std::size_t>(id)]) {
      result.segments.push_back(make_segment(points, target, id, id));
      mask[static_cast<std::size_t>(id)] = 1;
    }
  }
  out.before_repair = result.segments.size();

  for (PointId id : target) {
    if (mask[static_cast<std::size_t>(id)]) continue;
    result.segments.push_back(make_segment(points, target, id, id));
    mask[static_cast<std::size_t>(id)] = 1;
    ++out.orphans;
  }
  return out;
}

SegmentCover lines_to_noncrossing_segments(const PointSet& points, std::span<const PointId> target,
                                           const LineCover& cover) {
  return lines_to_segments_detailed(points, target, cover).cover;
}

SegmentCover partition_to_segments(const PointSet& points, std::span<const Edge> partition_edges) {
  const VerifyReport report = verify_convex_partition(points, partition_edges);
  if (!report.valid) throw InvalidPartition("partition_to_segments: " + report.to_text());
  const HullDecomposition hull = hull_decomposition(points);
  const InnerClassification cls = classify_inner(points, hull);
  if (cls.is_special) throw SpecialInput("partition_to_segments requires a non-special point set");

  const std::vector<Edge> edges = normalize_edges(points, partition_edges);
  const std::size_t n = points.size();
  std::vector<char> inner(n, 0);
  for (PointId id : hull.inner) inner[static_cast<std::size_t>(id)] = 1;

  // Inner-inner edges, indexed so that chains can be joined with union-find.
  std::vector<Edge> interior;
  for (const Edge& e : edges) {
    if (inner[static_cast<std::size_t>(e.u)] && inner[static_cast<std::size_t>(e.v)]) interior.push_back(e);
  }
  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (std::size_t k = 0; k < interior.size(); ++k) {
    incident[static_cast<std::size_t>(interior[k].u)].push_back(k);
    incident[static_cast<std::size_t>(interior[k].v)].push_back(k);
  }
  std::vector<std::size_t> parent(interior.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (PointId p : hull.inner) {
    const auto pi = static_cast<std::size_t>(p);
    if (degree[pi] != 2 || incident[pi].size() != 2) continue;
    const Edge& e = interior[incident[pi][0]];
    const Edge& f = interior[incident[pi][1]];
    const PointId a = e.u == p ? e.v : e.u;
    const PointId b = f.u == p ? f.v : f.u;
    if (cross(points[a], points[p], points[b]) == 0 && dot(points[p], points[a], points[b]) < 0) {
      parent[find(incident[pi][0])] = find(incident[pi][1]);
    }
  }

  // Each group is a straight path; its endpoints appear once.
  std::vector<std::vector<std::size_t>> groups(interior.size());
  for (std::size_t k = 0; k < interior.size(); ++k) groups[find(k)].push_back(k);
  SegmentCover cover;
  const std::span<const PointId> target = hull.inner;
  for (const auto& group : groups) {
    // Lone edges not continued through a degree-2 point are left to the
    // point-segment pass.
    if (group.size() < 2) continue;
    std::vector<PointId> ends;
    for (std::size_t k : group) {
      ends.push_back(interior[k].u);
      ends.push_back(interior[k].v);
    }
    std::sort(ends.begin(), ends.end());
    std::vector<PointId> odd;
    for (std::size_t i = 0; i < ends.size();) {
      std::size_t j = i;
      while (j < ends.size() && ends[j] == ends[i]) ++j;
      if ((j - i) % 2 == 1) odd.push_back(ends[i]);
      i = j;
    }
    if (odd.size() != 2) throw InvalidPartition("partition_to_segments: merged chain is not a path");
    cover.segments.push_back(make_segment(points, target, odd[0], odd[1]));
  }
  const std::vector<char> mask = covered_mask(points, target, cover);
  for (PointId id : hull.inner) {
    if (!mask[static_cast<std::size_t>(id)]) cover.segments.push_back(make_segment(points, target, id, id));
  }
  return cover;
}

}  // namespace convexpart
