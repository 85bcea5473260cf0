#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "geocover/json_io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("geocover-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  static const struct Cleanup {
    ~Cleanup() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
  } cleanup;
  return dir;
}

std::string path_of(const std::string& name) { return (scratch_dir() / name).string(); }

Run run(const std::string& args) {
  const std::string out = path_of("stdout.txt");
  const std::string err = path_of("stderr.txt");
  const std::string cmd = std::string(GEOCOVER_CLI) + " " + args + " >" + out + " 2>" + err;
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = geocover::read_text_file(out);
  r.err = geocover::read_text_file(err);
  return r;
}

}  // namespace

TEST_CASE("gen, cover and verify") {
  const std::string pts = path_of("pts.json");
  const std::string cov = path_of("cover.json");
  REQUIRE(run("gen --generator uniform --n 40 --seed 3 --out " + pts).code == 0);
  for (const char* algo : {"phase1", "phase12", "k6", "zigzagham", "twoedge"}) {
    INFO(algo);
    const Run c = run("cover --points " + pts + " --algo " + algo + " --out " + cov);
    CHECK(c.code == 0);
    CHECK(run("verify --points " + pts + " --cover " + cov).code == 0);
  }
  const Run conv = run("gen --generator convex --n 9 --seed 1");
  CHECK(conv.code == 0);
  geocover::write_text_file(path_of("convex.json"), conv.out);
  CHECK(run("cover --points " + path_of("convex.json") + " --algo convex").code == 0);
}

TEST_CASE("verify names a missing edge") {
  const std::string pts = path_of("pts6.json");
  const std::string cov = path_of("cover6.json");
  REQUIRE(run("gen --generator uniform --n 6 --seed 2 --out " + pts).code == 0);
  REQUIRE(run("cover --points " + pts + " --algo twoedge --out " + cov).code == 0);
  auto doc = nlohmann::ordered_json::parse(geocover::read_text_file(cov));
  auto& pieces = doc.at("pieces");
  // Shorten the first 2-edge path to its first edge; its second edge is then
  // missing.
  auto& verts = pieces.at(0).at("vertices");
  REQUIRE(verts.size() == 3);
  const int a = verts.at(1).get<int>(), b = verts.at(2).get<int>();
  verts.erase(2);
  doc.erase("stats");
  geocover::write_text_file(path_of("broken.json"), doc.dump());
  const Run v = run("verify --points " + pts + " --cover " + path_of("broken.json"));
  CHECK(v.code == 1);
  const std::string edge = "(" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b)) + ")";
  CHECK(v.err.find(edge) != std::string::npos);
  const auto report = nlohmann::json::parse(v.out);
  CHECK(report.at("pass") == false);
}

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("cover").code == 2);
  CHECK(run("gen --generator nope").code == 2);
  CHECK(run("cover --points /nonexistent/x.json").code == 3);
  geocover::write_text_file(path_of("bad.json"), "{\"n\": 1, \"points\": [[0.5, 2]]}");
  CHECK(run("cover --points " + path_of("bad.json")).code == 3);
  const std::string big = path_of("big.json");
  REQUIRE(run("gen --generator uniform --n 9 --seed 1 --out " + big).code == 0);
  CHECK(run("oracle --points " + big).code == 4);
  CHECK(run("gen --generator dense --n 256 --alpha 0.5").code == 5);
  REQUIRE(run("gen --generator uniform --n 16 --seed 1 --out " + path_of("p16.json")).code == 0);
  CHECK(run("cover --points " + path_of("p16.json") + " --algo k6 --mode exact").code == 5);
}

TEST_CASE("bounds, oracle, experiment and render") {
  const Run b = run("bounds --generator tripartite --k 3 --seed 1");
  REQUIRE(b.code == 0);
  const auto cert = nlohmann::json::parse(b.out);
  CHECK(cert.at("max_e0") == 5);
  CHECK(cert.contains("conditions"));

  REQUIRE(run("gen --generator uniform --n 3 --seed 1 --out " + path_of("p3.json")).code == 0);
  const Run o = run("oracle --points " + path_of("p3.json") + " --kind monotone_path");
  REQUIRE(o.code == 0);
  CHECK(nlohmann::json::parse(o.out).at("optimum") == 2);

  const Run e = run("experiment --algo phase1 --ns 16..128 --seeds 2");
  REQUIRE(e.code == 0);
  CHECK(e.out.rfind("# geocover-experiment-csv v1\n", 0) == 0);
  CHECK(e.err.find("exponent") != std::string::npos);

  const Run svg = run("render --points " + path_of("p3.json") + " --title tri");
  REQUIRE(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(svg.out.find("</svg>") != std::string::npos);
}

TEST_CASE("output is identical across runs") {
  const std::string a = run("gen --generator tripartite --k 4 --seed 9").out;
  CHECK(a == run("gen --generator tripartite --k 4 --seed 9").out);
  geocover::write_text_file(path_of("tri.json"), a);
  const std::string c1 = run("cover --points " + path_of("tri.json") + " --algo phase12").out;
  CHECK(c1 == run("cover --points " + path_of("tri.json") + " --algo phase12").out);
  const std::string e1 = run("experiment --algo zigzagham --ns 8,12 --seeds 2").out;
  CHECK(e1 == run("experiment --algo zigzagham --ns 8,12 --seeds 2").out);
}
