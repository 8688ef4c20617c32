#include "convexpart/instances_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "convexpart/errors.hpp"

namespace convexpart {
namespace {

constexpr int kGridAttempts = 12;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool grid_census_ok(const PointSet& grid, int k) {
  const auto lines = enumerate_lines(grid, grid.all_ids());
  std::size_t vertical = 0, horizontal = 0;
  for (const Line& l : lines) {
    const std::size_t c = l.covered.size();
    if (c < 3) continue;
    if (c == static_cast<std::size_t>(2 * k) && l.b == 0) {
      ++vertical;
    } else if (c == static_cast<std::size_t>(2 * k + 1)) {
      ++horizontal;
    } else {
      return false;
    }
  }
  // With k = 1 the vertical lines hold two points and do not show up above.
  const std::size_t want_vertical = k == 1 ? 0 : static_cast<std::size_t>(2 * k + 1);
  return vertical == want_vertical && horizontal == static_cast<std::size_t>(k);
}

std::vector<std::pair<Coord, Coord>> fig2_left_coords() { return {{-2, 0}, {2, 0}, {2, 3}, {-2, 3}, {0, 2}}; }

std::vector<std::pair<Coord, Coord>> fig10_coords() {
  return {{-2000, 0}, {-976, 217}, {-918, -397}, {-509, -860}, {93, -994}, {659, -749},
          {973, -217}, {914, 397},  {506, 860},   {-96, 994},   {-662, 748}};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void format_error(std::size_t line_no, const std::string& msg) {
  throw IoError("line " + std::to_string(line_no) + ": " + msg);
}

bool parse_int(const std::string& tok, long long& out) {
  try {
    std::size_t used = 0;
    out = std::stoll(tok, &used);
    return used == tok.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

PointSet gen_adversarial_grid(int k) {
  if (k < 1) throw ValidationError("grid parameter k must be positive");
  for (int attempt = 0; attempt < kGridAttempts; ++attempt) {
    const Coord scale = (Coord{4} * k * k) << attempt;
    std::vector<std::pair<Coord, Coord>> coords;
    for (Coord y = 1; y <= 2 * k; ++y) {
      for (Coord x = 1; x <= 2 * k + 1; ++x) {
        Coord offset = (y / 2) * x;
        if (y % 2 == 1) {
          const std::uint64_t h = splitmix64((static_cast<std::uint64_t>(attempt) << 40) ^
                                             (static_cast<std::uint64_t>(y) << 20) ^ static_cast<std::uint64_t>(x));
          offset = 1 + static_cast<Coord>(h % static_cast<std::uint64_t>(scale / 2));
        }
        coords.emplace_back(x * scale, y * scale + offset);
      }
    }
    PointSet grid(coords);
    if (grid_census_ok(grid, k)) return grid;
  }
  throw ConstructionFailed("adversarial grid failed its line census for k = " + std::to_string(k));
}

PointSet gen_adversarial_grid_enclosed(int k) {
  std::vector<std::pair<Coord, Coord>> coords = gen_adversarial_grid(k).coords();
  Coord x0 = coords[0].first, x1 = x0, y0 = coords[0].second, y1 = y0;
  for (auto [x, y] : coords) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const Coord span = std::max(x1 - x0, y1 - y0) + 1;
  const Coord cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  coords.emplace_back(cx - 4 * span, cy - 2 * span);
  coords.emplace_back(cx + 4 * span + 1, cy - 2 * span - 1);
  coords.emplace_back(cx + 1, cy + 4 * span);
  return PointSet(coords);
}

PointSet gen_collinear_fan(int m) {
  if (m < 1) throw ValidationError("fan needs at least one inner point");
  const Coord l = m + 1;
  std::vector<std::pair<Coord, Coord>> coords = {{0, 0},           {30 * l, 7 * l},  {24 * l, 14 * l}, {17 * l, 17 * l},
                                                 {5 * l, 14 * l},  {14 * l, -9 * l}, {30 * l, -6 * l}};
  for (Coord i = 1; i <= m; ++i) coords.emplace_back(30 * i, 7 * i);
  return PointSet(coords);
}

std::vector<Edge> collinear_fan_witness(int m) {
  // Hull order: 0, 5, 6, 1, 2, 3, 4.
  const std::vector<PointId> ring{0, 5, 6, 1, 2, 3, 4};
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < ring.size(); ++k) edges.push_back(Edge::make(ring[k], ring[(k + 1) % ring.size()]));
  PointId prev = 0;
  for (PointId i = 7; i < 7 + m; ++i) {
    edges.push_back(Edge::make(prev, i));
    prev = i;
  }
  edges.push_back(Edge::make(prev, 1));
  return edges;
}

PointSet gen_random(std::size_t n, std::uint64_t seed, double collinearity_bias, std::int64_t coord_range) {
  const Coord range = coord_range > 0 ? coord_range : std::max<Coord>(64, 8 * static_cast<Coord>(n));
  if (static_cast<double>(range) * static_cast<double>(range) < 2.0 * static_cast<double>(n)) {
    throw ValidationError("coordinate range too small for the requested point count");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> coord(0, range - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::set<std::pair<Coord, Coord>> taken;
  std::vector<std::pair<Coord, Coord>> coords;
  coords.reserve(n);
  while (coords.size() < n) {
    std::pair<Coord, Coord> c{coord(rng), coord(rng)};
    if (coords.size() >= 2 && coin(rng) < collinearity_bias) {
      std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
      const auto p = coords[pick(rng)], q = coords[pick(rng)];
      if (p != q) {
        const Coord dx = q.first - p.first, dy = q.second - p.second;
        const Coord g = std::gcd(dx, dy);
        std::uniform_int_distribution<Coord> step(-g, 2 * g);
        for (int tries = 0; tries < 20; ++tries) {
          const Coord t = step(rng);
          const std::pair<Coord, Coord> s{p.first + t * (dx / g), p.second + t * (dy / g)};
          if (s.first >= 0 && s.first < range && s.second >= 0 && s.second < range && !taken.count(s)) {
            c = s;
            break;
          }
        }
      }
    }
    if (taken.insert(c).second) coords.push_back(c);
  }
  return PointSet(coords);
}

std::vector<std::string> fixture_names() { return {"fig1", "fig2_left", "fig10"}; }

PointSet fixture(const std::string& name) {
  if (name == "fig1") return gen_collinear_fan(5);
  if (name == "fig2_left") return PointSet(fig2_left_coords());
  if (name == "fig10") return PointSet(fig10_coords());
  throw ValidationError("unknown fixture '" + name + "'");
}

InstanceFile parse_instance(std::istream& in) {
  InstanceFile inst;
  std::string line;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::pair<Coord, Coord>> coords;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      if (n >= 0) format_error(line_no, "comment after the point count");
      const std::string body = trim(t.substr(1));
      const auto eq = body.find('=');
      const bool is_meta = eq != std::string::npos && eq > 0 && body.find(' ') > eq;
      if (!is_meta) {
        inst.comments.push_back(body);
      } else if (body.substr(0, eq) == "name") {
        inst.name = body.substr(eq + 1);
      } else {
        inst.meta.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      }
      continue;
    }
    std::istringstream fields(t);
    std::vector<std::string> toks;
    for (std::string tok; fields >> tok;) toks.push_back(tok);
    if (n < 0) {
      if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0) format_error(line_no, "expected the point count");
      continue;
    }
    long long x = 0, y = 0;
    if (toks.size() != 2 || !parse_int(toks[0], x) || !parse_int(toks[1], y)) {
      format_error(line_no, "expected two integers");
    }
    coords.emplace_back(x, y);
  }
  if (n < 0) throw IoError("missing point count");
  if (coords.size() != static_cast<std::size_t>(n)) {
    throw IoError("expected " + std::to_string(n) + " points, found " + std::to_string(coords.size()));
  }
  inst.points = PointSet(coords);
  return inst;
}

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceFile& inst) {
  if (!inst.name.empty()) out << "# name=" << inst.name << '\n';
  for (const auto& [k, v] : inst.meta) out << "# " << k << '=' << v << '\n';
  for (const auto& c : inst.comments) out << "# " << c << '\n';
  out << inst.points.size() << '\n';
  for (const Point& p : inst.points) out << p.x << ' ' << p.y << '\n';
}

void write_instance(const std::string& path, const InstanceFile& inst) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_instance(out, inst);
  if (!out) throw IoError("write failed for " + path);
}

bool operator==(const Solution& a, const Solution& b) {
  if (a.edges != b.edges || a.segments != b.segments || a.lines.size() != b.lines.size()) return false;
  for (std::size_t i = 0; i < a.lines.size(); ++i) {
    if (!same_line(a.lines[i], b.lines[i])) return false;
  }
  return true;
}

Solution parse_solution(std::istream& in) {
  Solution sol;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream fields(t);
    std::vector<std::string> toks;
    for (std::string tok; fields >> tok;) toks.push_back(tok);
    if (toks.size() == 3 && (toks[0] == "edge" || toks[0] == "seg")) {
      long long i = 0, j = 0;
      if (!parse_int(toks[1], i) || !parse_int(toks[2], j) || i < 0 || j < 0) format_error(line_no, "bad id");
      if (toks[0] == "edge") {
        sol.edges.push_back({static_cast<PointId>(i), static_cast<PointId>(j)});
      } else {
        sol.segments.emplace_back(static_cast<PointId>(i), static_cast<PointId>(j));
      }
    } else if (toks.size() == 4 && toks[0] == "line") {
      Wide a = 0, b = 0, c = 0;
      if (!parse_wide(toks[1], a) || !parse_wide(toks[2], b) || !parse_wide(toks[3], c)) {
        format_error(line_no, "bad line coefficients");
      }
      try {
        sol.lines.push_back(canonical_line(a, b, c));
      } catch (const ValidationError& e) {
        format_error(line_no, e.what());
      }
    } else {
      format_error(line_no, "expected 'edge i j', 'seg i j' or 'line a b c'");
    }
  }
  return sol;
}

Solution read_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_solution(in);
}

void write_solution(std::ostream& out, const Solution& sol) {
  for (const Edge& e : sol.edges) out << "edge " << e.u << ' ' << e.v << '\n';
  for (const auto& [u, v] : sol.segments) out << "seg " << u << ' ' << v << '\n';
  for (const Line& l : sol.lines) out << "line " << l.a << ' ' << l.b << ' ' << to_string(l.c) << '\n';
}

void write_solution(const std::string& path, const Solution& sol) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_solution(out, sol);
  if (!out) throw IoError("write failed for " + path);
}

std::string render_svg(const PointSet& points, std::span<const Edge> edges,
                       std::span<const std::vector<PointId>> faces) {
  static const char* const kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                         "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  constexpr double kScale = 4.0;
  constexpr double kMargin = 8.0;
  if (points.empty()) return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"0\" height=\"0\"/>\n";

  Coord x0 = points[0].x, x1 = x0, y0 = points[0].y, y1 = y0;
  for (const Point& p : points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  auto px = [&](const Point& p) { return kMargin + kScale * static_cast<double>(p.x - x0); };
  auto py = [&](const Point& p) { return kMargin + kScale * static_cast<double>(y1 - p.y); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * kMargin + kScale * static_cast<double>(x1 - x0)
     << "\" height=\"" << 2 * kMargin + kScale * static_cast<double>(y1 - y0) << "\">\n";
  std::size_t colour = 0;
  for (const auto& face : faces) {
    os << "<polygon fill=\"" << kPalette[colour++ % std::size(kPalette)] << "\" stroke=\"none\" points=\"";
    for (PointId v : face) os << px(points[v]) << ',' << py(points[v]) << ' ';
    os << "\"/>\n";
  }
  for (const Edge& e : edges) {
    os << "<line x1=\"" << px(points[e.u]) << "\" y1=\"" << py(points[e.u]) << "\" x2=\"" << px(points[e.v])
       << "\" y2=\"" << py(points[e.v]) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const Point& p : points) {
    os << "<circle cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"1.5\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace convexpart
