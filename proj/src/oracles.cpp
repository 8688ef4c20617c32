#include "convexpart/oracles.hpp"

#include <algorithm>
#include <bit>

#include "convexpart/cover_lines.hpp"
#include "convexpart/errors.hpp"
#include "convexpart/partitioner.hpp"
#include "convexpart/verifier.hpp"

namespace convexpart {
namespace {

struct Dir {
  Wide x, y;
};

bool upper_half(const Dir& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

// Strict angular order starting at direction (1, 0).
bool angle_less(const Dir& a, const Dir& b) {
  const bool ha = upper_half(a), hb = upper_half(b);
  if (ha != hb) return ha;
  return a.x * b.y - a.y * b.x > 0;
}

// Open angular interval from `from` counterclockwise to `to`; the full turn
// minus `from` when the two coincide.
bool strictly_between(const Dir& from, const Dir& to, const Dir& e) {
  const bool same = !angle_less(from, to) && !angle_less(to, from);
  if (same) return angle_less(from, e) || angle_less(e, from);
  if (angle_less(from, to)) return angle_less(from, e) && angle_less(e, to);
  return angle_less(from, e) || angle_less(e, to);
}

class McpSearch {
 public:
  McpSearch(const PointSet& points, std::uint64_t budget) : points_(points), budget_(budget) {
    const std::size_t n = points.size();
    hull_ = hull_decomposition(points);
    is_inner_.assign(n, 0);
    for (PointId v : hull_.inner) is_inner_[static_cast<std::size_t>(v)] = 1;

    const std::size_t r = hull_.ring.size();
    for (std::size_t k = 0; k < r; ++k) fixed_.push_back(Edge::make(hull_.ring[k], hull_.ring[(k + 1) % r]));
    std::sort(fixed_.begin(), fixed_.end());

    for (PointId u = 0; u < static_cast<PointId>(n); ++u) {
      for (PointId v = u + 1; v < static_cast<PointId>(n); ++v) {
        if (!is_inner_[static_cast<std::size_t>(u)] && !is_inner_[static_cast<std::size_t>(v)]) continue;
        bool blocked = false;
        for (PointId w = 0; w < static_cast<PointId>(n) && !blocked; ++w) {
          blocked = in_open_segment(points[w], points[u], points[v]);
        }
        if (!blocked) candidates_.push_back(Edge::make(u, v));
      }
    }
    const std::size_t c = candidates_.size();
    crosses_.assign(c, std::vector<char>(c, 0));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = i + 1; j < c; ++j) {
        const Edge &e = candidates_[i], &f = candidates_[j];
        const bool x = relative_interiors_intersect(points[e.u], points[e.v], points[f.u], points[f.v]);
        crosses_[i][j] = crosses_[j][i] = x;
      }
    }
    chosen_.assign(c, 0);
  }

  void run(std::vector<Edge> initial) {
    best_edges_ = std::move(initial);
    dfs(0);
  }

  const std::vector<Edge>& best() const { return best_edges_; }
  std::uint64_t explored() const { return explored_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  Dir dir(PointId from, PointId to) const {
    return {Wide{points_[to].x} - points_[from].x, Wide{points_[to].y} - points_[from].y};
  }

  std::vector<Dir> incident(PointId v) const {
    std::vector<Dir> out;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (!chosen_[i]) continue;
      const Edge& e = candidates_[i];
      if (e.u == v) out.push_back(dir(v, e.v));
      if (e.v == v) out.push_back(dir(v, e.u));
    }
    std::sort(out.begin(), out.end(), angle_less);
    return out;
  }

  // Candidate indices that would split a gap wider than pi at v; empty
  // `deficient` flag means all gaps are fine.
  std::vector<std::size_t> repairs(PointId v, bool& deficient) const {
    const std::vector<Dir> dirs = incident(v);
    deficient = false;
    Dir from{}, to{};
    if (dirs.empty()) {
      deficient = true;
    } else {
      for (std::size_t k = 0; k < dirs.size() && !deficient; ++k) {
        const Dir& a = dirs[k];
        const Dir& b = dirs[(k + 1) % dirs.size()];
        const Wide turn = a.x * b.y - a.y * b.x;
        if (dirs.size() == 1 || turn < 0) {
          deficient = true;
          from = a;
          to = b;
        }
      }
    }
    std::vector<std::size_t> out;
    if (!deficient) return out;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      if (chosen_[i]) continue;
      const Edge& e = candidates_[i];
      if (e.u != v && e.v != v) continue;
      bool ok = true;
      for (std::size_t j = 0; j < candidates_.size() && ok; ++j) ok = !(chosen_[j] && crosses_[i][j]);
      if (!ok) continue;
      if (!dirs.empty() && !strictly_between(from, to, dir(v, e.u == v ? e.v : e.u))) continue;
      out.push_back(i);
    }
    return out;
  }

  void dfs(std::size_t chosen_count) {
    if (budget_ != 0 && explored_ >= budget_) {
      budget_hit_ = true;
      return;
    }
    ++explored_;
    const std::size_t current = fixed_.size() + chosen_count;

    std::size_t deficient_count = 0;
    PointId pick = -1;
    std::vector<std::size_t> pick_options;
    for (PointId v : hull_.inner) {
      bool deficient = false;
      std::vector<std::size_t> options = repairs(v, deficient);
      if (!deficient) continue;
      ++deficient_count;
      if (options.empty()) return;
      if (pick < 0 || options.size() < pick_options.size()) {
        pick = v;
        pick_options = std::move(options);
      }
    }
    if (deficient_count == 0) {
      if (current < best_edges_.size()) {
        best_edges_ = fixed_;
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
          if (chosen_[i]) best_edges_.push_back(candidates_[i]);
        }
      }
      return;
    }
    if (current + (deficient_count + 1) / 2 >= best_edges_.size()) return;
    for (std::size_t i : pick_options) {
      chosen_[i] = 1;
      dfs(chosen_count + 1);
      chosen_[i] = 0;
      if (budget_hit_) return;
    }
  }

  const PointSet& points_;
  std::uint64_t budget_;
  HullDecomposition hull_;
  std::vector<char> is_inner_;
  std::vector<Edge> fixed_;
  std::vector<Edge> candidates_;
  std::vector<std::vector<char>> crosses_;
  std::vector<char> chosen_;
  std::vector<Edge> best_edges_;
  std::uint64_t explored_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

OracleResult exact_mcp(const PointSet& points, std::uint64_t node_budget) {
  if (points.size() > kExactMcpGuard) {
    throw GuardExceeded("exact_mcp accepts at most " + std::to_string(kExactMcpGuard) + " points, got " +
                        std::to_string(points.size()));
  }
  if (points.size() < 3 || all_collinear(points)) throw AllCollinear();

  McpSearch search(points, node_budget);
  search.run(fallback_partition(points).edges);

  OracleResult res;
  res.edges = normalize_edges(points, search.best());
  const VerifyReport report = verify_convex_partition(points, res.edges);
  if (!report.valid) throw ConstructionFailed("exact_mcp witness failed verification:\n" + report.to_text());
  res.optimum = report.face_count;
  res.explored = search.explored();
  res.budget_hit = search.budget_hit();
  return res;
}

OracleResult exact_segment_cover(const PointSet& points, std::span<const PointId> target,
                                 std::uint64_t node_budget) {
  if (target.size() > kExactSegmentCoverGuard) {
    throw GuardExceeded("exact_segment_cover accepts at most " + std::to_string(kExactSegmentCoverGuard) +
                        " points, got " + std::to_string(target.size()));
  }
  OracleResult res;
  if (target.empty()) return res;

  // Bit i of a mask stands for target[i].
  std::vector<PointId> ids(target.begin(), target.end());
  auto bit = [&](PointId id) {
    return std::uint32_t{1} << static_cast<std::uint32_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
  };
  struct Cand {
    PointId u, v;
    std::uint32_t mask;
  };
  std::vector<Cand> cands;
  for (const Line& line : enumerate_lines(points, ids)) {
    const auto& run = line.covered;
    for (std::size_t i = 0; i < run.size(); ++i) {
      std::uint32_t mask = bit(run[i]);
      for (std::size_t j = i + 1; j < run.size(); ++j) {
        mask |= bit(run[j]);
        cands.push_back({run[i], run[j], mask});
      }
    }
  }
  for (PointId id : ids) cands.push_back({id, id, bit(id)});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::popcount(a.mask) > std::popcount(b.mask);
  });
  const std::size_t c = cands.size();
  std::vector<std::vector<char>> crosses(c, std::vector<char>(c, 0));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      crosses[i][j] = crosses[j][i] = relative_interiors_intersect(points[cands[i].u], points[cands[i].v],
                                                                   points[cands[j].u], points[cands[j].v]);
    }
  }
  const int max_cover = std::popcount(cands.front().mask);
  const std::uint32_t full = (ids.size() == 32) ? ~0u : ((std::uint32_t{1} << ids.size()) - 1);

  SegmentCover greedy = greedy_segment_cover(points, ids);
  std::vector<std::pair<PointId, PointId>> best;
  for (const Segment& s : greedy.segments) best.emplace_back(s.u, s.v);

  std::vector<std::size_t> stack;
  std::uint64_t explored = 0;
  bool budget_hit = false;
  auto dfs = [&](auto&& self, std::uint32_t covered) -> void {
    if (node_budget != 0 && explored >= node_budget) {
      budget_hit = true;
      return;
    }
    ++explored;
    if (covered == full) {
      if (stack.size() < best.size()) {
        best.clear();
        for (std::size_t i : stack) best.emplace_back(cands[i].u, cands[i].v);
      }
      return;
    }
    const int uncovered = static_cast<int>(ids.size()) - std::popcount(covered);
    if (stack.size() + static_cast<std::size_t>((uncovered + max_cover - 1) / max_cover) >= best.size()) return;
    const std::uint32_t first = static_cast<std::uint32_t>(std::countr_zero(~covered & full));
    for (std::size_t i = 0; i < c; ++i) {
      if (!(cands[i].mask >> first & 1u)) continue;
      bool ok = true;
      for (std::size_t j : stack) ok = ok && !crosses[i][j];
      if (!ok) continue;
      stack.push_back(i);
      self(self, covered | cands[i].mask);
      stack.pop_back();
      if (budget_hit) return;
    }
  };
  dfs(dfs, 0);

  for (auto [u, v] : best) res.segments.segments.push_back(make_segment(points, ids, u, v));
  res.optimum = res.segments.s();
  res.explored = explored;
  res.budget_hit = budget_hit;
  return res;
}

}  // namespace convexpart
