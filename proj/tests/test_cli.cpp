#include <doctest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "robspan/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = robspan::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void put(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("robspan_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("build writes the graph and a sidecar report") {
  TempDir dir;
  const auto r = run({"build", "g2x", "--n", "8", "--out", dir / "g.txt"});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "g.txt.report").find("edges=17\n") != std::string::npos);
  CHECK(slurp(dir / "g.txt").rfind("dim 1 n 8 m 17\n", 0) == 0);
  CHECK(run({"build", "grid", "--side", "3"}).out.find("edges=12\n") != std::string::npos);
  CHECK(run({"build", "gf", "--preset", "kpow", "--epsilon", "1", "--n", "20"}).out.find("edges=57\n") !=
        std::string::npos);
  const auto audited = run({"build", "g2x", "--n", "16", "--audit", "--out", dir / "a.txt"});
  CHECK(audited.out.find("measured_stretch=1\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"build", "nonsense", "--n", "3"}).code == 1);
  CHECK(run({"build", "gf", "--preset", "bogus", "--n", "3"}).code == 1);
  CHECK(run({"build", "g2x"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("certify") {
  TempDir dir;
  run({"build", "g2x", "--n", "8", "--out", dir / "g2x.txt"});
  put(dir / "s.txt", "3\n");
  const auto g = run({"certify", "--graph", dir / "g2x.txt", "--failed", dir / "s.txt", "--builder", "g2x",
                      "--out", dir / "cert.txt"});
  CHECK(g.code == 0);
  CHECK(slurp(dir / "cert.txt").find("verified=true") != std::string::npos);

  put(dir / "path.txt", "dim 1 n 5 m 4\n1\n2\n3\n4\n5\n0 1\n1 2\n2 3\n3 4\n");
  put(dir / "mid.txt", "2\n");
  const auto o = run({"certify", "--graph", dir / "path.txt", "--failed", dir / "mid.txt"});
  CHECK(o.code == 0);
  CHECK(o.out.find("|S+|=3 verified=true minimal=true") != std::string::npos);

  const auto empty = run({"certify", "--graph", dir / "path.txt"});
  CHECK(empty.code == 0);
  CHECK(empty.out.find("|S|=0 |S+|=0") != std::string::npos);

  // a hand-picked S+ that leaves 1 and 3 cut apart
  const auto bad = run({"certify", "--graph", dir / "path.txt", "--failed", dir / "mid.txt", "--builder", "given",
                        "--casualties", dir / "mid.txt"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("violation: 1 3 inf") != std::string::npos);

  // g2x's kill rule on a path cannot succeed: retries exhausted
  const auto exhausted = run({"certify", "--graph", dir / "path.txt", "--failed", dir / "mid.txt", "--builder",
                              "g2x", "--retries", "3"});
  CHECK(exhausted.code == 3);
}

TEST_CASE("certify with rebuilt constructions") {
  TempDir dir;
  run({"build", "robust-dd", "--n", "40", "--seed", "4", "--out", dir / "dd.txt"});
  put(dir / "s.txt", "1\n7\n");
  CHECK(run({"certify", "--graph", dir / "dd.txt", "--failed", dir / "s.txt", "--builder", "robust-dd", "--seed",
             "4"})
            .code == 0);
  CHECK(run({"certify", "--graph", dir / "dd.txt", "--failed", dir / "s.txt", "--builder", "robust-dd", "--seed",
             "5"})
            .code == 1);
  run({"build", "grid", "--side", "6", "--out", dir / "grid.txt"});
  CHECK(run({"certify", "--graph", dir / "grid.txt", "--failed", dir / "s.txt", "--builder", "grid"}).code == 0);
}

TEST_CASE("attack, oracle, census, magnification, probe") {
  TempDir dir;
  std::string path = "dim 1 n 100 m 99\n";
  for (int i = 1; i <= 100; ++i) path += std::to_string(i) + "\n";
  for (int i = 0; i < 99; ++i) path += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  put(dir / "path.txt", path);
  const auto a = run({"attack", "--graph", dir / "path.txt", "--kind", "interval_endpoints", "--k", "4", "--i", "50",
                      "--t", "2", "--out", dir / "s.txt"});
  CHECK(a.code == 0);
  CHECK(slurp(dir / "s.txt") == "48\n49\n50\n");
  CHECK(a.err.find("cut_holds=true") != std::string::npos);
  CHECK(run({"attack", "--graph", dir / "path.txt", "--k", "6", "--i", "50"}).code == 1);

  const auto o = run({"oracle", "--graph", dir / "path.txt", "--failed", dir / "s.txt"});
  CHECK(o.code == 0);
  CHECK(o.out.find("|S|=3 |S+|=51 verified=true minimal=true") != std::string::npos);

  const auto c = run({"census", "--graph", dir / "path.txt"});
  CHECK(c.out.rfind("class,lo,hi,edges,flagged\n1,1,4,99,false\n2,2,8,0,true\n", 0) == 0);

  put(dir / "p4.txt", "dim 1 n 4 m 3\n1\n2\n3\n4\n0 1\n1 2\n2 3\n");
  CHECK(run({"magnification", "--graph", dir / "p4.txt", "--s-max", "2"}).out == "s,min_neighborhood\n1,1\n2,1\n");

  run({"build", "g2x", "--n", "64", "--out", dir / "g.txt"});
  const auto p = run({"probe", "--graph", dir / "g.txt", "--k", "2,4", "--trials", "2", "--builder", "g2x"});
  CHECK(p.code == 0);
  CHECK(std::count(p.out.begin(), p.out.end(), '\n') > 5);
}

TEST_CASE("sweep output is stable and deterministic") {
  const std::vector<std::string> args{"sweep", "g2x", "--n", "64,128", "--k", "2,4", "--trials", "2", "--seed", "9"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("construction,n,k,trial,seed,edges,splus,bound,ratio,verified,success,trials,splus_oracle,"
                    "oracle_exact,status\n",
                    0) == 0);
  CHECK(a.out.find("\nconstruction,n,k,rows,max_ratio,mean_ratio,all_verified,all_within_bound\n") !=
        std::string::npos);
  CHECK(run({"sweep", "grid", "--n", "10", "--k", "1"}).code == 1);
  CHECK(run({"sweep", "grid", "--n", "36", "--k", "1,2"}).code == 0);
}
