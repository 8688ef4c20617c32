#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "convexpart/cli.hpp"
#include "convexpart/instances_io.hpp"
#include "convexpart/verifier.hpp"

using namespace convexpart;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("convexpart_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
  return cells;
}

}  // namespace

TEST_CASE("gen and solve a fan") {
  TempDir dir;
  const std::string inst = dir.file("fan.txt");
  REQUIRE(run({"gen", "fan", "50", "--out", inst}).code == kExitOk);
  const std::string sol = dir.file("fan.sol");
  const Run r = run({"solve", inst, "--header", "--solution", sol, "--check"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == kSolveHeader);
  const auto cells = split_csv(row);
  REQUIRE(cells.size() == 9);
  CHECK(cells[0] == "fan_m50");
  CHECK(cells[1] == "57");
  CHECK(cells[2] == "SPECIAL");
  CHECK(std::stoi(cells[5]) <= 4);

  // The written solution recounts to the printed face count.
  const PointSet pts = read_instance(inst).points;
  const VerifyReport rep = verify_convex_partition(pts, read_solution(sol).edges);
  CHECK(rep.valid);
  CHECK(std::to_string(rep.face_count) == cells[5]);
  CHECK(run({"verify", inst, sol}).code == kExitOk);
}

TEST_CASE("exact mcp on the fig2_left fixture") {
  TempDir dir;
  const std::string inst = dir.file("fig2.txt");
  REQUIRE(run({"gen", "fixture", "fig2_left", "--out", inst}).code == kExitOk);
  const Run r = run({"exact", inst, "--problem", "mcp"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("optimum=3") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const std::string line = dir.file("line.txt");
  write_file(line, "3\n0 0\n1 1\n2 2\n");
  CHECK(run({"solve", line}).code == kExitAllCollinear);
  CHECK(run({"solve", dir.file("missing.txt")}).code == kExitIo);
  const std::string garbage = dir.file("bad.txt");
  write_file(garbage, "2\n0 0\n");
  CHECK(run({"solve", garbage}).code == kExitIo);

  const std::string big = dir.file("big.txt");
  REQUIRE(run({"gen", "random", "12", "--out", big}).code == kExitOk);
  CHECK(run({"exact", big, "--problem", "mcp"}).code == kExitGuard);

  const std::string sq = dir.file("sq.txt");
  write_file(sq, "5\n0 0\n2 0\n2 2\n0 2\n1 1\n");
  const std::string ring = dir.file("ring.sol");
  write_file(ring, "edge 0 1\nedge 1 2\nedge 2 3\nedge 3 0\n");
  const Run v = run({"verify", sq, ring});
  CHECK(v.code == kExitInvalid);
  CHECK(v.out.find("ZERO_DEGREE_POINT") != std::string::npos);
  CHECK(run({"bogus"}).code == kExitIo);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("segment and line cover verification") {
  TempDir dir;
  const std::string sq = dir.file("sq.txt");
  write_file(sq, "5\n0 0\n2 0\n2 2\n0 2\n1 1\n");
  const std::string seg = dir.file("seg.sol");
  write_file(seg, "seg 4 4\n");
  CHECK(run({"verify", sq, seg, "--kind", "segcover", "--target", "inner"}).code == kExitOk);
  CHECK(run({"verify", sq, seg, "--kind", "segcover"}).code == kExitInvalid);
  const std::string lines = dir.file("lines.sol");
  write_file(lines, "line 1 -1 0\nline 1 1 2\n");
  CHECK(run({"verify", sq, lines, "--kind", "linecover"}).code == kExitOk);
}

TEST_CASE("gen is reproducible and honours the seed override") {
  const Run a = run({"gen", "random", "20", "--seed", "5"});
  const Run b = run({"gen", "random", "20", "--seed", "5"});
  CHECK(a.out == b.out);
  ::setenv("CONVEXPART_SEED", "9", 1);
  const Run c = run({"gen", "random", "20", "--seed", "5"});
  ::unsetenv("CONVEXPART_SEED");
  CHECK(c.out.find("# seed=9") != std::string::npos);
  CHECK(c.out != a.out);
}

TEST_CASE("bench grids reports the ratio column") {
  const Run r = run({"bench", "grids", "k=1..3", "--jobs", "2"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("ratio") != std::string::npos);
  int rows = 0;
  for (std::string row; std::getline(in, row);) {
    ++rows;
    CHECK(row.rfind(std::to_string(rows) + ",", 0) == 0);
  }
  CHECK(rows == 3);
}
