#include "convexpart/cover_lines.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <tuple>

#include "convexpart/errors.hpp"

namespace convexpart {
namespace {

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Position of p along the canonical direction (-b, a) of the line.
Wide along(const Line& line, const Point& p) { return Wide{-line.b} * p.x + Wide{line.a} * p.y; }

void sort_along(Line& line, const PointSet& points) {
  std::sort(line.covered.begin(), line.covered.end(), [&](PointId u, PointId v) {
    return along(line, points[u]) < along(line, points[v]);
  });
}

// Compressed incidence structure: lines sorted by canonical key, with the
// incident target positions stored contiguously.
struct Key {
  Coord a, b;
  Wide c;
};

struct Incidences {
  std::vector<Key> keys;
  std::vector<std::uint32_t> raw;  // sorted line -> generation slot
  std::vector<std::size_t> offset;  // generation slot -> members range
  std::vector<PointId> members;

  std::size_t lo(std::size_t l) const { return offset[raw[l]]; }
  std::size_t hi(std::size_t l) const { return offset[raw[l] + 1]; }
};

Incidences build_incidences(const PointSet& points, std::span<const PointId> target) {
  struct Dir {
    Coord dx, dy;
    PointId other;
  };
  struct Rec {
    Coord a, b;
    Wide c;
    std::uint32_t raw;
  };
  const std::size_t n = target.size();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<Rec> recs;
  recs.reserve(pairs);
  Incidences inc;
  inc.offset.reserve(pairs + 1);
  inc.offset.push_back(0);
  inc.members.reserve(2 * pairs);
  std::vector<Dir> dirs;
  dirs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = points[target[i]];
    dirs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Point& q = points[target[j]];
      // Differences fit in 63 bits, so plain 64-bit gcd suffices here.
      Coord dx = q.x - p.x;
      Coord dy = q.y - p.y;
      const Coord g = std::gcd(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      dirs.push_back({dx, dy, static_cast<PointId>(j)});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& l, const Dir& r) {
      return std::tie(l.dx, l.dy, l.other) < std::tie(r.dx, r.dy, r.other);
    });
    for (std::size_t s = 0; s < dirs.size();) {
      std::size_t e = s;
      while (e < dirs.size() && dirs[e].dx == dirs[s].dx && dirs[e].dy == dirs[s].dy) ++e;
      // Emit each line once, from its lowest target position.
      if (static_cast<std::size_t>(dirs[s].other) > i) {
        // (dy, -dx) is already primitive; only the sign needs fixing.
        Coord a = dirs[s].dy, b = -dirs[s].dx;
        if (a < 0 || (a == 0 && b < 0)) {
          a = -a;
          b = -b;
        }
        recs.push_back({a, b, Wide{a} * p.x + Wide{b} * p.y, static_cast<std::uint32_t>(inc.offset.size() - 1)});
        inc.members.push_back(static_cast<PointId>(i));
        for (std::size_t k = s; k < e; ++k) inc.members.push_back(dirs[k].other);
        inc.offset.push_back(inc.members.size());
      }
      s = e;
    }
  }
  std::sort(recs.begin(), recs.end(),
            [](const Rec& l, const Rec& r) { return std::tie(l.a, l.b, l.c) < std::tie(r.a, r.b, r.c); });
  inc.keys.reserve(recs.size());
  inc.raw.reserve(recs.size());
  for (const Rec& r : recs) {
    inc.keys.push_back({r.a, r.b, r.c});
    inc.raw.push_back(r.raw);
  }
  return inc;
}

}  // namespace

std::strong_ordering compare_key(const Line& l, const Line& r) {
  if (auto c = l.a <=> r.a; c != 0) return c;
  if (auto c = l.b <=> r.b; c != 0) return c;
  if (l.c < r.c) return std::strong_ordering::less;
  if (l.c > r.c) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Line canonical_line(Wide a, Wide b, Wide c) {
  if (a == 0 && b == 0) throw ValidationError("line with a = b = 0");
  const Wide g = wide_gcd(wide_gcd(a, b), c);
  a /= g;
  b /= g;
  c /= g;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (wide_abs(a) > Wide{kMaxAbsCoord} * 2 || wide_abs(b) > Wide{kMaxAbsCoord} * 2) {
    throw ValidationError("line coefficient out of range");
  }
  return Line{static_cast<Coord>(a), static_cast<Coord>(b), c, {}};
}

Line line_through(const Point& p, const Point& q) {
  const Wide a = Wide{q.y} - p.y;
  const Wide b = Wide{p.x} - q.x;
  return canonical_line(a, b, a * p.x + b * p.y);
}

Line vertical_line(const Point& p) { return Line{1, 0, Wide{p.x}, {}}; }

void attach_incidences(Line& line, const PointSet& points, std::span<const PointId> target) {
  line.covered.clear();
  for (PointId id : target) {
    if (line.contains(points[id])) line.covered.push_back(id);
  }
  sort_along(line, points);
}

std::vector<PointId> LineCover::covered_set() const {
  std::vector<PointId> out;
  for (const auto& line : lines) out.insert(out.end(), line.covered.begin(), line.covered.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Line> enumerate_lines(const PointSet& points, std::span<const PointId> target) {
  const Incidences inc = build_incidences(points, target);
  std::vector<Line> lines;
  lines.reserve(inc.keys.size());
  for (std::size_t l = 0; l < inc.keys.size(); ++l) {
    Line line{inc.keys[l].a, inc.keys[l].b, inc.keys[l].c, {}};
    for (std::size_t k = inc.lo(l); k < inc.hi(l); ++k) {
      line.covered.push_back(target[static_cast<std::size_t>(inc.members[k])]);
    }
    sort_along(line, points);
    lines.push_back(std::move(line));
  }
  return lines;
}

LineCover greedy_line_cover(const PointSet& points, std::span<const PointId> target) {
  LineCover cover;
  const std::size_t n = target.size();
  if (n == 0) return cover;
  const Incidences inc = build_incidences(points, target);
  const std::size_t num_lines = inc.keys.size();

  // Position -> lines through it.
  std::vector<std::size_t> point_offset(n + 1, 0);
  for (PointId m : inc.members) ++point_offset[static_cast<std::size_t>(m) + 1];
  for (std::size_t i = 0; i < n; ++i) point_offset[i + 1] += point_offset[i];
  std::vector<std::size_t> point_lines(inc.members.size());
  {
    std::vector<std::size_t> fill(point_offset.begin(), point_offset.end() - 1);
    for (std::size_t l = 0; l < num_lines; ++l) {
      for (std::size_t k = inc.lo(l); k < inc.hi(l); ++k) {
        point_lines[fill[static_cast<std::size_t>(inc.members[k])]++] = l;
      }
    }
  }

  // Max-bucket queue with lazy deletion; each bucket pops its smallest line
  // index, which is the smallest canonical key.
  using MinHeap = std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>;
  std::vector<std::size_t> count(num_lines);
  std::vector<MinHeap> buckets(n + 1);
  {
    std::vector<std::vector<std::size_t>> initial(n + 1);
    for (std::size_t l = 0; l < num_lines; ++l) {
      count[l] = inc.hi(l) - inc.lo(l);
      if (count[l] >= 3) initial[count[l]].push_back(l);
    }
    for (std::size_t c = 3; c <= n; ++c) {
      buckets[c] = MinHeap(std::greater<>(), std::move(initial[c]));
    }
  }

  std::vector<char> covered(n, 0);
  std::size_t remaining = n;
  auto take = [&](std::size_t l) {
    Line chosen{inc.keys[l].a, inc.keys[l].b, inc.keys[l].c, {}};
    attach_incidences(chosen, points, target);
    cover.lines.push_back(std::move(chosen));
    for (std::size_t k = inc.lo(l); k < inc.hi(l); ++k) {
      const auto pos = static_cast<std::size_t>(inc.members[k]);
      if (covered[pos]) continue;
      covered[pos] = 1;
      --remaining;
      for (std::size_t q = point_offset[pos]; q < point_offset[pos + 1]; ++q) {
        const std::size_t other = point_lines[q];
        --count[other];
        if (other != l && count[other] >= 3) buckets[count[other]].push(other);
      }
    }
  };
  std::size_t top = n;
  while (remaining > 0) {
    while (top >= 3 && buckets[top].empty()) --top;
    if (top < 3) break;
    const std::size_t l = buckets[top].top();
    buckets[top].pop();
    if (count[l] == top) take(l);  // otherwise a stale entry
  }
  // Once no line has three uncovered points, counts only fall, so one pass in
  // key order picks exactly what the bucket queue would.
  for (std::size_t l = 0; l < num_lines && remaining > 0; ++l) {
    if (count[l] == 2) take(l);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (covered[i]) continue;
    Line line = vertical_line(points[target[i]]);
    attach_incidences(line, points, target);
    cover.lines.push_back(std::move(line));
  }
  return cover;
}

std::optional<LineCover> exact_line_cover(const PointSet& points, std::span<const PointId> target,
                                          std::uint64_t node_budget) {
  const std::size_t n = target.size();
  if (n > kExactLineCoverGuard) {
    throw GuardExceeded("exact_line_cover accepts at most 20 points, got " + std::to_string(n));
  }
  if (n == 0) return LineCover{};

  std::vector<Line> candidates = enumerate_lines(points, target);
  std::vector<std::uint32_t> masks;
  std::vector<PointId> position(points.size(), -1);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(target[i])] = static_cast<PointId>(i);
  auto mask_of = [&](const Line& line) {
    std::uint32_t m = 0;
    for (PointId id : line.covered) m |= 1u << position[static_cast<std::size_t>(id)];
    return m;
  };
  for (const auto& line : candidates) masks.push_back(mask_of(line));
  // Singleton fallback for points on no enumerated line.
  for (std::size_t i = 0; i < n; ++i) {
    const bool lonely = std::none_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return m >> i & 1u; });
    if (lonely) {
      Line line = vertical_line(points[target[i]]);
      attach_incidences(line, points, target);
      masks.push_back(mask_of(line));
      candidates.push_back(std::move(line));
    }
  }
  std::size_t max_size = 1;
  for (auto m : masks) max_size = std::max<std::size_t>(max_size, static_cast<std::size_t>(__builtin_popcount(m)));

  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  LineCover greedy = greedy_line_cover(points, target);
  std::size_t best = greedy.ell();
  std::vector<std::size_t> best_choice;
  bool improved = false;
  std::vector<std::size_t> choice;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  std::function<void(std::uint32_t)> search = [&](std::uint32_t covered) {
    if (exhausted) return;
    if (++nodes > node_budget) {
      exhausted = true;
      return;
    }
    if (covered == all) {
      if (choice.size() < best) {
        best = choice.size();
        best_choice = choice;
        improved = true;
      }
      return;
    }
    const std::size_t left = static_cast<std::size_t>(__builtin_popcount(all & ~covered));
    if (choice.size() + (left + max_size - 1) / max_size >= best) return;
    const int first = __builtin_ctz(all & ~covered);
    for (std::size_t c = 0; c < masks.size(); ++c) {
      if (!(masks[c] >> first & 1u)) continue;
      choice.push_back(c);
      search(covered | masks[c]);
      choice.pop_back();
    }
  };
  search(0);
  if (exhausted) return std::nullopt;
  if (!improved) return greedy;
  LineCover out;
  for (std::size_t c : best_choice) out.lines.push_back(candidates[c]);
  return out;
}

}  // namespace convexpart
