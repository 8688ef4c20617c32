#include "convexpart/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "convexpart/cover_lines.hpp"
#include "convexpart/cover_segments.hpp"
#include "convexpart/errors.hpp"
#include "convexpart/instances_io.hpp"
#include "convexpart/oracles.hpp"
#include "convexpart/partitioner.hpp"
#include "convexpart/verifier.hpp"

namespace convexpart {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed3(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << v;
  return os.str();
}

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("CONVEXPART_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ValidationError(std::string("CONVEXPART_SEED is not an unsigned integer: ") + env);
    }
  }
  return seed;
}

std::string instance_label(const InstanceFile& inst, const std::string& path) {
  if (!inst.name.empty()) return inst.name;
  return std::filesystem::path(path).stem().string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f || !(f << text)) throw IoError("cannot write " + path);
}

// ---- solve ---------------------------------------------------------------

struct SolveOpts {
  std::string instance;
  std::string svg;
  std::string solution;
  bool header = false;
  bool check = false;
};

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& err) {
  const InstanceFile inst = read_instance(o.instance);
  const auto start = Clock::now();
  const McpResult res = mcp_approx(inst.points);
  const double wall = ms_since(start);

  if (o.check) {
    const VerifyReport report = verify_convex_partition(inst.points, res.partition.edges);
    if (!report.valid || report.face_count != res.partition.f()) {
      err << report.to_text();
      return kExitInvalid;
    }
  }
  if (!o.solution.empty()) write_solution(o.solution, Solution{res.partition.edges, {}, {}});
  if (!o.svg.empty()) write_text(o.svg, render_svg(inst.points, res.partition.edges, res.partition.faces));

  if (o.header) out << kSolveHeader << '\n';
  out << instance_label(inst, o.instance) << ',' << inst.points.size() << ',' << branch_name(res.branch) << ','
      << res.ell << ',' << res.s << ',' << res.partition.f() << ',' << res.certificate.lower_bound << ','
      << res.certificate.ratio_bound.str() << ',' << fixed3(wall) << '\n';
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyOpts {
  std::string instance;
  std::string solution;
  std::string kind = "partition";
  std::string target = "all";
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const Solution sol = read_solution(o.solution);
  const PointSet& pts = inst.points;
  std::vector<PointId> target = o.target == "inner" ? hull_decomposition(pts).inner : pts.all_ids();

  VerifyReport report;
  if (o.kind == "partition") {
    report = verify_convex_partition(pts, sol.edges);
  } else if (o.kind == "segcover") {
    SegmentCover cover;
    for (auto [u, v] : sol.segments) {
      if (u < 0 || v < 0 || u >= static_cast<PointId>(pts.size()) || v >= static_cast<PointId>(pts.size())) {
        throw ValidationError("segment references a point id out of range");
      }
      cover.segments.push_back(make_segment(pts, target, u, v));
    }
    report = verify_segment_cover(pts, target, cover);
  } else {
    LineCover cover;
    cover.lines = sol.lines;
    report = verify_line_cover(pts, target, cover);
  }
  out << report.to_text();
  return report.valid ? kExitOk : kExitInvalid;
}

// ---- gen -----------------------------------------------------------------

struct GenOpts {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  double bias = 0.0;
  std::string out;
};

long long int_param(const std::vector<std::string>& params, std::size_t i, const char* what) {
  if (i >= params.size()) throw ValidationError(std::string("missing parameter: ") + what);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument(params[i]);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("parameter ") + what + " is not an integer: " + params[i]);
  }
}

int cmd_gen(const GenOpts& o, std::ostream& out) {
  InstanceFile inst;
  inst.meta.emplace_back("family", o.family);
  if (o.family == "grid" || o.family == "grid-enclosed") {
    const int k = static_cast<int>(int_param(o.params, 0, "k"));
    inst.points = o.family == "grid" ? gen_adversarial_grid(k) : gen_adversarial_grid_enclosed(k);
    inst.name = o.family + "_k" + std::to_string(k);
    inst.meta.emplace_back("k", std::to_string(k));
  } else if (o.family == "fan") {
    const int m = static_cast<int>(int_param(o.params, 0, "m"));
    inst.points = gen_collinear_fan(m);
    inst.name = "fan_m" + std::to_string(m);
    inst.meta.emplace_back("m", std::to_string(m));
  } else if (o.family == "random") {
    const long long n = int_param(o.params, 0, "n");
    if (n < 0) throw ValidationError("n must be non-negative");
    const std::uint64_t seed = effective_seed(o.seed);
    inst.points = gen_random(static_cast<std::size_t>(n), seed, o.bias);
    inst.name = "random_n" + std::to_string(n) + "_s" + std::to_string(seed);
    inst.meta.emplace_back("n", std::to_string(n));
    inst.meta.emplace_back("seed", std::to_string(seed));
    inst.meta.emplace_back("bias", std::to_string(o.bias));
  } else if (o.family == "fixture") {
    if (o.params.empty()) throw ValidationError("missing fixture name");
    inst.points = fixture(o.params[0]);
    inst.name = o.params[0];
  } else {
    throw ValidationError("unknown family '" + o.family + "' (grid, grid-enclosed, fan, random, fixture)");
  }
  if (o.out.empty()) {
    write_instance(out, inst);
  } else {
    write_instance(o.out, inst);
  }
  return kExitOk;
}

// ---- exact ---------------------------------------------------------------

struct ExactOpts {
  std::string instance;
  std::string problem = "mcp";
  std::string solution;
  std::uint64_t budget = 0;
};

int cmd_exact(const ExactOpts& o, std::ostream& out) {
  const InstanceFile inst = read_instance(o.instance);
  const PointSet& pts = inst.points;
  const std::vector<PointId> all = pts.all_ids();
  Solution sol;
  std::size_t optimum = 0;
  std::uint64_t explored = 0;
  bool budget_hit = false;
  if (o.problem == "mcp") {
    const OracleResult r = exact_mcp(pts, o.budget);
    optimum = r.optimum;
    explored = r.explored;
    budget_hit = r.budget_hit;
    sol.edges = r.edges;
  } else if (o.problem == "cpncs") {
    const OracleResult r = exact_segment_cover(pts, all, o.budget);
    optimum = r.optimum;
    explored = r.explored;
    budget_hit = r.budget_hit;
    for (const Segment& s : r.segments.segments) sol.segments.emplace_back(s.u, s.v);
  } else {
    const auto r = exact_line_cover(pts, all, o.budget == 0 ? 50'000'000 : o.budget);
    budget_hit = !r.has_value();
    if (r) {
      optimum = r->ell();
      sol.lines = r->lines;
    }
  }
  if (!o.solution.empty()) write_solution(o.solution, sol);
  out << "problem=" << o.problem << " optimum=" << optimum << " explored=" << explored
      << " budget_hit=" << (budget_hit ? 1 : 0) << '\n';
  return kExitOk;
}

// ---- bench ---------------------------------------------------------------

struct BenchOpts {
  std::vector<std::string> manifest;
  unsigned jobs = 1;
  std::size_t runs = 5;
  std::uint64_t seed = 1;
  double bias = 0.0;
};

// "a..b" or "a,b,c".
std::vector<long long> parse_range(const std::string& text) {
  std::vector<long long> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const long long lo = std::stoll(text.substr(0, dots)), hi = std::stoll(text.substr(dots + 2));
    for (long long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) out.push_back(std::stoll(tok));
  return out;
}

struct BenchTask {
  std::string family;
  long long value = 0;
};

std::string run_grid_row(long long k) {
  const auto start = Clock::now();
  const PointSet grid = gen_adversarial_grid(static_cast<int>(k));
  const std::vector<PointId> all = grid.all_ids();
  const SegmentCover greedy = greedy_segment_cover(grid, all);
  const double wall = ms_since(start);

  // The 2k+1 columns form the optimal cover.
  std::map<Coord, std::vector<PointId>> columns;
  for (const Point& p : grid) columns[p.x].push_back(p.id);
  SegmentCover vertical;
  for (auto& [x, ids] : columns) {
    std::sort(ids.begin(), ids.end(), [&](PointId a, PointId b) { return grid[a].y < grid[b].y; });
    vertical.segments.push_back(make_segment(grid, all, ids.front(), ids.back()));
  }
  const bool vertical_ok = verify_segment_cover(grid, all, vertical).valid && vertical.s() == static_cast<std::size_t>(2 * k + 1);
  const bool greedy_ok = verify_segment_cover(grid, all, greedy).valid;
  const bool holds = vertical_ok && greedy_ok && 2 * greedy.s() >= static_cast<std::size_t>(k * (2 * k + 1));

  std::ostringstream os;
  os << k << ',' << grid.size() << ',' << greedy.s() << ',' << vertical.s() << ','
     << fixed3(static_cast<double>(greedy.s()) / static_cast<double>(vertical.s())) << ','
     << fixed3(static_cast<double>(k) / 2.0) << ',' << (holds ? "yes" : "no") << ',' << fixed3(wall);
  return os.str();
}

std::string run_random_row(long long n, const BenchOpts& o) {
  const std::uint64_t seed = effective_seed(o.seed);
  const PointSet pts = gen_random(static_cast<std::size_t>(n), seed, o.bias);
  std::vector<double> times;
  McpResult res;
  for (std::size_t r = 0; r < std::max<std::size_t>(o.runs, 1); ++r) {
    const auto start = Clock::now();
    res = mcp_approx(pts);
    times.push_back(ms_since(start));
  }
  std::sort(times.begin(), times.end());
  std::ostringstream os;
  os << n << ',' << seed << ',' << o.bias << ',' << branch_name(res.branch) << ',' << res.partition.f() << ','
     << fixed3(times[times.size() / 2]);
  return os.str();
}

int cmd_bench(const BenchOpts& o, std::ostream& out) {
  std::vector<std::vector<std::string>> manifests;
  if (o.manifest.size() == 1 && std::filesystem::is_regular_file(o.manifest[0])) {
    std::ifstream in(o.manifest[0]);
    for (std::string line; std::getline(in, line);) {
      std::istringstream fields(line);
      std::vector<std::string> toks;
      for (std::string t; fields >> t;) toks.push_back(t);
      if (!toks.empty() && toks[0][0] != '#') manifests.push_back(toks);
    }
  } else {
    manifests.push_back(o.manifest);
  }

  for (const auto& m : manifests) {
    if (m.empty()) continue;
    const std::string family = m[0];
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < m.size(); ++i) {
      const auto eq = m[i].find('=');
      if (eq == std::string::npos) throw ValidationError("bench parameter must be key=value: " + m[i]);
      kv[m[i].substr(0, eq)] = m[i].substr(eq + 1);
    }
    std::vector<long long> values;
    std::string header;
    if (family == "grids") {
      values = parse_range(kv.count("k") ? kv["k"] : "1..6");
      header = "k,n,greedy_cpncs,vertical_cpncs,ratio,k_half,ratio_at_least_k_half,wall_ms";
    } else if (family == "random") {
      values = parse_range(kv.count("n") ? kv["n"] : "1000,2000");
      header = "n,seed,bias,branch,f,median_ms";
    } else {
      throw ValidationError("unknown bench family '" + family + "' (grids, random)");
    }

    std::vector<std::string> rows(values.size());
    std::vector<std::string> errors(values.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < values.size(); i = next++) {
        try {
          rows[i] = family == "grids" ? run_grid_row(values[i]) : run_random_row(values[i], o);
        } catch (const std::exception& e) {
          errors[i] = e.what();
        }
      }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(o.jobs, static_cast<unsigned>(values.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    out << header << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!errors[i].empty()) throw ConstructionFailed(errors[i]);
      out << rows[i] << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approximate minimum convex partitions of planar point sets"};
  app.require_subcommand(1);

  SolveOpts solve;
  auto* s = app.add_subcommand("solve", "Run the approximation pipeline and print one CSV row");
  s->add_option("instance", solve.instance, "Instance file")->required();
  s->add_option("--svg", solve.svg, "Write an SVG drawing");
  s->add_option("--solution", solve.solution, "Write the partition edges");
  s->add_flag("--header", solve.header, "Print the CSV header first");
  s->add_flag("--check", solve.check, "Verify the partition before reporting");

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Verify a solution file against an instance");
  v->add_option("instance", verify.instance, "Instance file")->required();
  v->add_option("solution", verify.solution, "Solution file")->required();
  v->add_option("--kind", verify.kind, "partition, segcover or linecover")
      ->check(CLI::IsMember({"partition", "segcover", "linecover"}));
  v->add_option("--target", verify.target, "Points a cover must cover: all or inner")
      ->check(CLI::IsMember({"all", "inner"}));

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("family", gen.family, "grid, grid-enclosed, fan, random or fixture")->required();
  g->add_option("params", gen.params, "Family parameters (k, m, n or fixture name)");
  g->add_option("--seed", gen.seed, "Random seed (CONVEXPART_SEED overrides)");
  g->add_option("--bias", gen.bias, "Collinearity bias in [0, 1]")->check(CLI::Range(0.0, 1.0));
  g->add_option("--out", gen.out, "Output path (default stdout)");

  ExactOpts exact;
  auto* e = app.add_subcommand("exact", "Solve a small instance exactly");
  e->add_option("instance", exact.instance, "Instance file")->required();
  e->add_option("--problem", exact.problem, "mcp, cpncs or cpl")->check(CLI::IsMember({"mcp", "cpncs", "cpl"}));
  e->add_option("--solution", exact.solution, "Write the witness");
  e->add_option("--budget", exact.budget, "Node budget (0 = unlimited)");

  BenchOpts bench;
  auto* b = app.add_subcommand("bench", "Run a benchmark manifest and print CSV");
  b->add_option("manifest", bench.manifest, "e.g. 'grids k=1..6', 'random n=1000,2000', or a manifest file")
      ->required();
  b->add_option("--jobs", bench.jobs, "Concurrent rows");
  b->add_option("--runs", bench.runs, "Timing repetitions for random rows");
  b->add_option("--seed", bench.seed, "Random seed (CONVEXPART_SEED overrides)");
  b->add_option("--bias", bench.bias, "Collinearity bias for random rows")->check(CLI::Range(0.0, 1.0));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (*s) return cmd_solve(solve, out, err);
    if (*v) return cmd_verify(verify, out);
    if (*g) return cmd_gen(gen, out);
    if (*e) return cmd_exact(exact, out);
    if (*b) return cmd_bench(bench, out);
  } catch (const AllCollinear& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitAllCollinear;
  } catch (const GuardExceeded& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace convexpart
